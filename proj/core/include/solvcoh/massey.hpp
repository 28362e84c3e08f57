#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvcoh/cohomology.hpp"
#include "solvcoh/hodge.hpp"
#include "solvcoh/serialize.hpp"

namespace solvcoh {

enum class Verdict { vanishes, non_vanishing, undefined };
std::string to_string(Verdict v);

/// Inputs that are not Bott-Chern cocycles or not bidegree-homogeneous.
class MasseyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dual certificate of non-vanishing. y annihilates im del + im delbar in
/// its characters, y(gamma) = value != 0, and for every x in the relevant
/// character blocks y(a12 ^ x) = witness12(ddbar x) and
/// y(x ^ a34) = witness34(ddbar x). The last two identities show that y
/// kills the whole indeterminacy, for every character, without elimination.
struct NonVanishingCertificate {
  Element functional;
  Element witness12;
  Element witness34;
  Scalar value;
};

struct MasseyResult {
  Element a12, a23, a34;
  Bidegree b12, b23, b34;
  std::vector<Character> characters;
  Element f13, f24;
  Element representative;
  Bidegree representative_bidegree;
  /// a12 ^ h for Aeppli-harmonic h, then h ^ a34.
  std::vector<Element> indeterminacy;
  std::vector<Element> indeterminacy_factors;
  int indeterminacy_left = 0;
  Verdict verdict = Verdict::undefined;
  /// Set for vanishing verdicts: gamma = indeterminacy combo + del z1 + delbar z2.
  std::optional<MembershipWitness> vanishing_witness;
  std::optional<NonVanishingCertificate> certificate;
  /// For undefined verdicts: the cup product that is not ddbar-exact.
  /// 1 for a12 ^ a23, 2 for a23 ^ a34; 0 when the product is defined.
  int obstruction_index = 0;
  Element obstruction;
  /// Annihilates im ddbar and is nonzero on the obstruction.
  Element obstruction_functional;
  std::string undefined_reason;
  std::vector<std::string> hypotheses;
};

/// Spanning set a12 ^ H_A^{r+u-1,s+v-1} followed by H_A^{p+r-1,q+s-1} ^ a34,
/// using Aeppli-harmonic bases over the given characters. Empty summands
/// when a bidegree index is out of range or the class is zero.
struct Indeterminacy {
  std::vector<Element> elements;
  /// The Aeppli-harmonic factor of each element.
  std::vector<Element> factors;
  int left_count = 0;
};

Indeterminacy indeterminacy_subspace(const MetricContext& ctx, const Element& a12, const Element& a34,
                                     Bidegree b12, Bidegree b23, Bidegree b34,
                                     const std::vector<Character>& s);

/// Full computation with lex-minimal primitives.
MasseyResult triple_abc_massey(const MetricContext& ctx, const Element& a12, const Element& a23,
                               const Element& a34, const std::vector<Character>& s);

/// Same with caller-supplied primitives (checked exactly).
MasseyResult triple_abc_massey_with_primitives(const MetricContext& ctx, const Element& a12,
                                               const Element& a23, const Element& a34,
                                               const Element& f13, const Element& f24,
                                               const std::vector<Character>& s);

enum class PairingKind { pointwise_zero, character_orthogonal, nonzero };

struct PairingCertificate {
  bool applies = false;
  std::string failure;
  /// Aeppli-harmonic representative used; differs from the computed one when
  /// `substituted` is set.
  Element gamma;
  bool substituted = false;
  Scalar norm;  // <gamma, gamma>
  bool coclosed = false;  // del *gamma = delbar *gamma = 0
  struct Pairing {
    PairingKind kind;
    std::vector<Character> characters;
  };
  std::vector<Pairing> pairings;
  std::set<Character> orthogonality_characters;
  /// <representative, gamma>: nonzero iff the pattern proves non-vanishing.
  Scalar representative_pairing;
};

/// Re-derives non-vanishing by pairing with *gamma: gamma Aeppli-harmonic,
/// <gamma,gamma> != 0, each indeterminacy generator pairs to zero pointwise
/// or by character orthogonality, exact terms vanish by Stokes.
/// Throws std::invalid_argument on a zero representative.
PairingCertificate pairing_certificate(const MetricContext& ctx, const MasseyResult& r);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Substitution and functional evaluation only.
CertificateCheck verify_massey_certificate(const ManifoldModel& m, const MasseyResult& r);

Json massey_to_json(const ManifoldModel& m, const MasseyResult& r);
/// The model is embedded; it is returned via `model_out`.
MasseyResult massey_from_json(const Json& j, std::optional<ManifoldModel>& model_out);

}  // namespace solvcoh

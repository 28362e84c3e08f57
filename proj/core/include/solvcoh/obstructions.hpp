#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcoh/model.hpp"
#include "solvcoh/serialize.hpp"

namespace solvcoh {

/// ddbar eta = scale * beta ^ conj(beta) with beta a simple (2,0)-form.
struct AsthenoCertificate {
  Element theta1;
  Element theta2;
  Element beta;
  Element eta;
  Rational scale{1};
};

/// Tries beta = theta_i ^ theta_j for every unordered pool pair. The
/// primitive eta is the one of minimal L2 norm (orthogonal to ker ddbar).
/// Throws std::invalid_argument if a pool element is not a (1,0)-form.
std::vector<AsthenoCertificate> astheno_obstruction_scan(const ManifoldModel& m,
                                                         const std::vector<Element>& pool);

/// The extra elements followed by the coframe.
std::vector<Element> default_pool(const ManifoldModel& m, const std::vector<Element>& extra = {});

enum class AsthenoFailure { None, BetaZero, NotTwoZero, NotSingleCharacter, NotDecomposable, ScaleInvalid,
                            EquationFails };
std::string to_string(AsthenoFailure f);

struct AsthenoCheck {
  bool ok = false;
  AsthenoFailure failure = AsthenoFailure::None;
};

AsthenoCheck verify_astheno_certificate(const ManifoldModel& m, const AsthenoCertificate& c);

/// True iff the (2,0)-form has a rank-2 coefficient matrix.
bool is_decomposable(const Element& beta);

/// The Stokes contradiction instantiated for this certificate.
std::string astheno_proof_sketch(const ManifoldModel& m, const AsthenoCertificate& c);

struct CanonicalReport {
  Element top_form;
  Element dbar_top;
  bool holomorphic = false;
  /// 0 when the invariant section is holomorphic; unset otherwise.
  std::optional<int> kodaira_dimension;
  std::string text;
};

CanonicalReport canonical_section_check(const ManifoldModel& m);

Json astheno_to_json(const ManifoldModel& m, const AsthenoCertificate& c);
AsthenoCertificate astheno_from_json(const Json& j, std::optional<ManifoldModel>& model_out);

}  // namespace solvcoh

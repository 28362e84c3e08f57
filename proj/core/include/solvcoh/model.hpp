#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvcoh/element.hpp"
#include "solvcoh/linalg.hpp"

namespace solvcoh {

enum class ValidationErrorKind {
  ParseError,
  InvalidData,
  NotIntegrable,
  NotClosedSquare,
  DlogNotClosed,
  NotUnitary,
  NotUnimodular,
};

std::string to_string(ValidationErrorKind k);

class ModelError : public std::runtime_error {
 public:
  ModelError(ValidationErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

struct BasisCharacter {
  std::string label;
  Rational weight;
  /// Constant-coefficient 1-form, trivial character.
  Element dlog;
};

/// Raw description of a model, before validation.
struct ModelData {
  std::string name;
  int n = 0;
  std::vector<std::string> coframe;
  std::vector<BasisCharacter> characters;
  /// structure[j] = d(phi^{j+1}); trivial character, total degree 2.
  std::vector<Element> structure;
  /// Diagonal Hermitian metric g = sum m_j phi^j (x) phibar^j.
  std::vector<Rational> metric;
  /// Default character set for cohomology computations.
  std::vector<Character> character_set;
  std::map<std::string, std::string> meta;
};

enum class OpKind { d, del, delbar, ddbar };
std::string to_string(OpKind k);

/// Validated, immutable model of an invariant complex structure.
class ManifoldModel {
 public:
  /// Validates every invariant; throws ModelError on the first failure.
  static ManifoldModel create(ModelData data);

  const ModelData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  int n() const { return data_.n; }
  const std::vector<std::string>& coframe() const { return data_.coframe; }
  std::vector<std::string> character_labels() const;
  const std::vector<Rational>& metric() const { return data_.metric; }
  const std::vector<Character>& default_character_set() const { return data_.character_set; }

  Rational weight(const Character& chi) const;
  Element dlog(const Character& chi) const;

  Element zero() const { return Element(data_.n); }
  Element coframe_form(int j, bool bar = false, const Scalar& c = 1) const;
  /// The unit top-degree monomial.
  FormMonomial volume_monomial() const;

  /// Exterior derivative and its bidegree components. ddbar = del o delbar.
  Element d(const Element& a) const;
  Element del(const Element& a) const;
  Element delbar(const Element& a) const;
  Element ddbar(const Element& a) const;
  Element apply(OpKind kind, const Element& a) const;

  /// d(e_K) for a monomial, as a list of terms with trivial character.
  std::vector<std::pair<FormMonomial, Scalar>> d_monomial(const FormMonomial& m) const;

  std::string format(const Element& a) const { return a.str(data_.coframe, character_labels()); }

 private:
  explicit ManifoldModel(ModelData data);
  void validate() const;
  ModelData data_;
  std::vector<Element> structure_bar_;
};

/// Greedy search for an ordering making the structure equations
/// triangular with constant coefficients.
bool check_nilpotent_J(const ManifoldModel& m);

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Target bidegrees of an operator applied at (p,q), clipped to [0,n].
std::vector<Bidegree> target_bidegrees(OpKind kind, int n, int p, int q);

struct OperatorBlock {
  OpKind kind;
  Character chi;
  Bidegree source;
  /// For d the rows are the (p+1,q) monomials followed by the (p,q+1) ones.
  std::vector<Bidegree> targets;
  SparseMatrix matrix;
};

OperatorBlock operator_block(const ManifoldModel& m, OpKind kind, const Character& chi, int p, int q);

/// Coordinates of the chi-component of `a` restricted to bidegree (p,q).
SparseVector to_coordinates(const Element& a, const Character& chi, const MonomialBasis& basis);
Element from_coordinates(const SparseVector& v, const Character& chi, const MonomialBasis& basis);

/// Adds inverses and the trivial character; sorted and deduplicated.
std::vector<Character> close_under_inverse(std::vector<Character> s);

}  // namespace solvcoh

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solvcoh/character.hpp"
#include "solvcoh/monomial.hpp"
#include "solvcoh/scalar.hpp"

namespace solvcoh {

struct TermKey {
  Character chi;
  FormMonomial mono;
};

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (auto c = a.chi <=> b.chi; c != 0) return c < 0;
    return monomial_less(a.mono, b.mono);
  }
};

/// Finite sum of c * f_chi * phi^I ^ phibar^J over a coframe of size dim().
/// Zero coefficients are never stored, so two elements are equal iff their
/// term maps are equal.
class Element {
 public:
  using TermMap = std::map<TermKey, Scalar, TermKeyLess>;

  Element() = default;
  explicit Element(int dim) : dim_(dim) {}

  static Element monomial(int dim, const FormMonomial& m, const Scalar& c = 1,
                          const Character& chi = {});
  static Element constant(int dim, const Scalar& c, const Character& chi = {});

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Character& chi, const FormMonomial& m, const Scalar& c);
  Scalar coefficient(const Character& chi, const FormMonomial& m) const;

  /// Bidegree if every term has the same one; nullopt for zero or mixed.
  std::optional<std::pair<int, int>> bidegree() const;
  /// Total degree if homogeneous in total degree.
  std::optional<int> degree() const;
  std::set<Character> characters() const;
  Element character_component(const Character& chi) const;
  /// Multiplies every term by f_chi.
  Element times_character(const Character& chi) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);

  /// Human-readable form using the coframe labels and character labels.
  std::string str(const std::vector<std::string>& coframe,
                  const std::vector<std::string>& character_labels = {}) const;

 private:
  void check_dim(const Element& o) const;
  int dim_ = 0;
  TermMap terms_;
};

/// Graded-commutative wedge product; characters multiply.
/// Throws std::invalid_argument on dimension mismatch.
Element wedge(const Element& a, const Element& b);
Element wedge(std::initializer_list<Element> factors);
/// Antilinear; swaps holomorphic and antiholomorphic parts; inverts characters.
Element conjugate(const Element& a);
Element project_bidegree(const Element& a, int p, int q);
Element project_degree(const Element& a, int k);

/// "f^2" style character rendering with the model's labels.
std::string character_str(const Character& chi, const std::vector<std::string>& labels);

}  // namespace solvcoh

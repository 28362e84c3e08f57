#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "solvcoh/element.hpp"
#include "solvcoh/expression.hpp"
#include "solvcoh/families.hpp"
#include "solvcoh/linalg.hpp"
#include "solvcoh/model.hpp"

namespace solvcoh::testing {

inline ManifoldModel br_model(int n) { return ManifoldModel::create(bigalke_rollenske(n)); }

inline ManifoldModel nakamura_model(std::vector<long> lambdas, Rational t = 1) {
  NakamuraParams p;
  for (long l : lambdas) p.lambdas.push_back(Rational(l));
  p.t = t;
  return ManifoldModel::create(nakamura(p).data);
}

inline ManifoldModel semidirect_model(int n, int m, Rational lambda = 1) {
  SemidirectParams p;
  p.n = n;
  p.m = m;
  p.lambda = lambda;
  return ManifoldModel::create(semidirect_family(p));
}

inline Element expr(const ManifoldModel& m, std::string_view s) { return parse_expression(m, s); }

/// Coordinates of a list of elements over the union of their term keys.
inline std::vector<SparseVector> common_coordinates(const std::vector<Element>& xs) {
  std::map<TermKey, int, TermKeyLess> index;
  for (const auto& x : xs) {
    for (const auto& [k, c] : x.terms()) index.try_emplace(k, 0);
  }
  int next = 0;
  for (auto& [k, i] : index) i = next++;
  std::vector<SparseVector> out;
  for (const auto& x : xs) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [k, c] : x.terms()) e.emplace_back(index.at(k), c);
    out.push_back(SparseVector::from_entries(std::move(e)));
  }
  return out;
}

inline int span_rank(const std::vector<Element>& xs) {
  Echelon ech;
  for (auto& v : common_coordinates(xs)) ech.insert(std::move(v));
  return ech.rank();
}

/// span(a) == span(b) as subspaces.
inline bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

inline bool in_span(const Element& x, const std::vector<Element>& basis) {
  std::vector<Element> with = basis;
  with.push_back(x);
  return span_rank(with) == span_rank(basis);
}

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Scalar scalar(bool allow_complex = true) {
    Rational re(uniform(-4, 4), uniform(1, 3));
    re.canonicalize();
    Rational im = allow_complex && uniform(0, 2) == 0 ? canonical(uniform(-3, 3), uniform(1, 2)) : Rational(0);
    if (sgn(re) == 0 && sgn(im) == 0) re = 1;
    return Scalar(re, im);
  }

  Character character(const ManifoldModel& m) {
    const auto& s = m.default_character_set();
    return s[uniform(0, static_cast<int>(s.size()) - 1)];
  }

  FormMonomial monomial(int n, int p, int q) {
    return FormMonomial{subset(n, p), subset(n, q)};
  }

  /// Sum of up to `terms` random monomials of bidegree (p,q).
  Element form(const ManifoldModel& m, int p, int q, int terms = 3) {
    Element e = m.zero();
    const int count = uniform(1, terms);
    for (int i = 0; i < count; ++i) e.add_term(character(m), monomial(m.n(), p, q), scalar());
    return e;
  }

  /// Random form of total degree k, mixing bidegrees.
  Element form_of_degree(const ManifoldModel& m, int k, int terms = 3) {
    Element e = m.zero();
    const int count = uniform(1, terms);
    for (int i = 0; i < count; ++i) {
      const int p = uniform(std::max(0, k - m.n()), std::min(k, m.n()));
      e.add_term(character(m), monomial(m.n(), p, k - p), scalar());
    }
    return e;
  }

  std::mt19937& engine() { return rng_; }

  static Rational canonical(int num, int den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  Mask subset(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    Mask m = 0;
    for (int i = 0; i < k; ++i) m |= Mask(1) << idx[i];
    return m;
  }

  std::mt19937 rng_;
};

}  // namespace solvcoh::testing

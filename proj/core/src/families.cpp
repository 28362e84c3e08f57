#include "solvcoh/families.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace solvcoh {

namespace {

/// phi^a ^ phi^b (bars as flagged), with the sign of the canonical reordering.
Element wedge2(int n, int a, bool abar, int b, bool bbar, const Scalar& c = 1) {
  Element e(n);
  FormMonomial x, y;
  (abar ? x.anti : x.holo) = Mask(1) << (a - 1);
  (bbar ? y.anti : y.holo) = Mask(1) << (b - 1);
  const SignedMonomial sm = wedge(x, y);
  if (sm.sign != 0) e.add_term({}, sm.mono, sm.sign > 0 ? c : -c);
  return e;
}

std::vector<std::string> labels(const std::string& stem, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(from + i));
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& r : v) out += (out.empty() ? "" : ",") + to_string(r);
  return out;
}

}  // namespace

ModelData bigalke_rollenske(int n) {
  if (n < 2) throw std::invalid_argument("bigalke_rollenske needs n >= 2");
  const int dim = 4 * n - 2;
  ModelData d;
  d.name = fmt::format("bigalke-rollenske-{}", n);
  d.n = dim;
  d.coframe = labels("phi", 1, dim);
  d.structure.assign(dim, Element(dim));
  d.structure[3 * n - 2] = wedge2(dim, 2 * n, false, n, true);
  for (int j = 3 * n; j <= 4 * n - 2; ++j) {
    d.structure[j - 1] = wedge2(dim, j - 3 * n + 1, false, j - 2 * n + 1, false) +
                         wedge2(dim, j - 2 * n, false, j - n, true);
  }
  d.metric.assign(dim, Rational(1));
  d.character_set = {Character{}};
  d.meta["family"] = "bigalke-rollenske";
  d.meta["n"] = std::to_string(n);
  return d;
}

ModelData torus(int n) {
  if (n < 1) throw std::invalid_argument("torus needs n >= 1");
  ModelData d;
  d.name = fmt::format("torus-{}", n);
  d.n = n;
  d.coframe = labels("phi", 1, n);
  d.structure.assign(n, Element(n));
  d.metric.assign(n, Rational(1));
  d.character_set = {Character{}};
  d.meta["family"] = "torus";
  return d;
}

Rational nakamura_weight(const NakamuraParams& params, const std::vector<int>& I, const std::vector<int>& J) {
  Rational c(0);
  for (int i : I) c += params.lambdas.at(i - 1);
  for (int j : J) c += params.lambdas.at(j - 1);
  return c;
}

namespace {

void check_params(const NakamuraParams& p) {
  if (p.lambdas.empty()) throw std::invalid_argument("nakamura needs at least one lambda");
  Rational sum(0);
  bool nonzero = false;
  for (const auto& l : p.lambdas) {
    sum += l;
    nonzero = nonzero || sgn(l) != 0;
  }
  if (sgn(sum) != 0) throw std::invalid_argument("nakamura lambdas must sum to zero");
  if (!nonzero) throw std::invalid_argument("nakamura lambdas must not all vanish (torus)");
  if (sgn(p.t) <= 0) throw std::invalid_argument("nakamura t must be positive");
  if (p.lambdas.size() > 20) throw std::invalid_argument("too many lambdas");
}

bool integral(const Rational& r) { return r.get_den() == 1; }

std::vector<int> subset(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

std::set<Rational> admissible_characters(const NakamuraParams& params) {
  check_params(params);
  const unsigned count = 1u << params.lambdas.size();
  std::set<Rational> out;
  for (unsigned i = 0; i < count; ++i) {
    for (unsigned j = 0; j < count; ++j) {
      const Rational c = nakamura_weight(params, subset(i), subset(j));
      if (integral(Rational(params.t * c))) {
        out.insert(c);
        out.insert(-c);
      }
    }
  }
  return out;
}

NakamuraModel nakamura(const NakamuraParams& params) {
  check_params(params);
  const int k = static_cast<int>(params.lambdas.size());
  const int dim = k + 1;
  NakamuraModel out;
  ModelData& d = out.data;
  d.name = "nakamura";
  d.n = dim;
  d.coframe = labels("phi", 0, dim);
  d.structure.assign(dim, Element(dim));
  for (int i = 1; i <= k; ++i) {
    const Scalar c(Rational(-params.lambdas[i - 1] / 2));
    d.structure[i] = wedge2(dim, 1, false, i + 1, false, c) + wedge2(dim, 1, true, i + 1, false, c);
  }
  const Rational inv_t = 1 / params.t;
  Element dlog(dim);
  dlog.add_term({}, FormMonomial{1, 0}, Scalar(Rational(-inv_t / 2)));
  dlog.add_term({}, FormMonomial{0, 1}, Scalar(Rational(inv_t / 2)));
  d.characters.push_back(BasisCharacter{"f", inv_t, dlog});
  for (const auto& c : admissible_characters(params)) {
    const Rational e = params.t * c;
    d.character_set.push_back(Character::basis(0, static_cast<int>(e.get_num().get_si())));
  }
  d.metric.assign(dim, Rational(1));
  d.meta["family"] = "nakamura";
  d.meta["lambda"] = join(params.lambdas);
  d.meta["t"] = to_string(params.t);
  d.meta["integrality"] = "formal model";

  NakamuraFlags& f = out.flags;
  f.only_trivial_integral_weights = true;
  const unsigned count = 1u << k;
  for (unsigned i = 0; i < count; ++i) {
    for (unsigned j = 0; j < count; ++j) {
      const Rational c = nakamura_weight(params, subset(i), subset(j));
      const bool integral_weight = integral(Rational(params.t * c));
      if (integral_weight != (sgn(c) == 0)) f.only_trivial_integral_weights = false;
      if ((i & j) == 0 && integral_weight && sgn(c) != 0 && !f.witness) {
        f.disjoint_nonzero_integral_weight = true;
        f.witness.emplace(subset(i), subset(j));
      }
    }
  }
  return out;
}

ModelData semidirect_family(const SemidirectParams& p) {
  if (p.n < 1 || p.m < 1) throw std::invalid_argument("semidirect family needs n, m >= 1");
  if (sgn(p.lambda) == 0) throw std::invalid_argument("semidirect family needs lambda != 0");
  if (!p.ks.empty() && static_cast<int>(p.ks.size()) != 2 * p.n) {
    throw std::invalid_argument("semidirect family needs 2n lattice integers");
  }
  const int nphi = 2 * p.n;
  const int dim = nphi + 2 * p.m;
  ModelData d;
  d.name = fmt::format("semidirect-{}-{}", p.n, p.m);
  d.n = dim;
  d.coframe = labels("phi", 1, nphi);
  for (const auto& l : labels("psi", 1, 2 * p.m)) d.coframe.push_back(l);
  d.structure.assign(dim, Element(dim));
  for (int j = 0; j < p.m; ++j) {
    const int odd = nphi + 2 * j + 1;
    const int even = odd + 1;
    for (int k = 1; k <= nphi; ++k) {
      const bool eta_bar = (k % 2 == 0);
      // eta has phi^k (k odd) or phibar^k (k even); conj(eta) the opposite.
      d.structure[odd - 1] += wedge2(dim, k, eta_bar, odd, false, Scalar(Rational(-p.lambda)));
      d.structure[even - 1] += wedge2(dim, k, !eta_bar, even, false, Scalar(p.lambda));
    }
  }
  Element dlog1(dim), dlog2(dim);
  for (int k = 1; k <= nphi; ++k) {
    Element& target = (k % 2 == 0) ? dlog1 : dlog2;
    const Scalar c = (k % 2 == 0) ? Scalar(Rational(-p.lambda)) : Scalar(p.lambda);
    FormMonomial h{Mask(1) << (k - 1), 0};
    FormMonomial a{0, Mask(1) << (k - 1)};
    target.add_term({}, h, c);
    target.add_term({}, a, -c);
  }
  d.characters.push_back(BasisCharacter{"beta1", Rational(-p.lambda), dlog1});
  d.characters.push_back(BasisCharacter{"beta2", p.lambda, dlog2});
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) d.character_set.push_back(Character({a, b}));
  }
  d.metric.assign(dim, Rational(1));
  d.meta["family"] = "semidirect";
  d.meta["lambda"] = to_string(p.lambda);
  std::string ks;
  for (long k : p.ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
  d.meta["ks"] = ks;
  return d;
}

Element semidirect_sigma(const ManifoldModel& m, int n) {
  Element s = m.zero();
  for (int k = 1; k <= 2 * n; ++k) s += m.coframe_form(k);
  return s;
}

}  // namespace solvcoh

#include "solvcoh/hodge.hpp"

#include <stdexcept>

namespace solvcoh {

std::string to_string(HarmonicKind k) { return k == HarmonicKind::bott_chern ? "bott_chern" : "aeppli"; }

MetricContext::MetricContext(const ManifoldModel& m) : model_(&m), volume_(m.volume_monomial()) {
  for (const auto& g : m.metric()) inverse_metric_.push_back(1 / g);
}

Rational MetricContext::norm2(const FormMonomial& k) const {
  Rational r(1);
  for (int i : k.holo_indices()) r *= inverse_metric_[i - 1];
  for (int i : k.anti_indices()) r *= inverse_metric_[i - 1];
  return r;
}

FormMonomial MetricContext::complement(const FormMonomial& k) const {
  return FormMonomial{volume_.holo & ~k.holo, volume_.anti & ~k.anti};
}

int MetricContext::complement_sign(const FormMonomial& k) const { return wedge(k, complement(k)).sign; }

std::vector<Rational> MetricContext::gram(int p, int q) const {
  std::vector<Rational> out;
  if (p < 0 || q < 0 || p > model_->n() || q > model_->n()) return out;
  const MonomialBasis basis(model_->n(), p, q);
  out.reserve(basis.size());
  for (const auto& mono : basis.monomials()) out.push_back(norm2(mono));
  return out;
}

Element hodge_star(const MetricContext& ctx, const Element& a) {
  Element out(a.dim());
  for (const auto& [key, c] : a.terms()) {
    Scalar v = c.conj() * Scalar(ctx.norm2(key.mono));
    if (ctx.complement_sign(key.mono) < 0) v = -v;
    out.add_term(key.chi.inverse(), ctx.complement(key.mono), v);
  }
  return out;
}

Element pointwise_product(const MetricContext& ctx, const Element& a, const Element& b) {
  Element out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (!(ka.mono == kb.mono)) continue;
      out.add_term(ka.chi * kb.chi.inverse(), FormMonomial{}, ca * cb.conj() * Scalar(ctx.norm2(ka.mono)));
    }
  }
  return out;
}

Scalar inner_product(const MetricContext& ctx, const Element& a, const Element& b) {
  Scalar s;
  const auto& bt = b.terms();
  for (const auto& [key, c] : a.terms()) {
    auto it = bt.find(key);
    if (it != bt.end()) s += c * it->second.conj() * Scalar(ctx.norm2(key.mono));
  }
  return s;
}

bool is_harmonic(const MetricContext& ctx, const Element& a, HarmonicKind kind) {
  if (a.is_zero()) return true;
  if (!a.bidegree()) throw std::invalid_argument("is_harmonic needs a bidegree-homogeneous form");
  const ManifoldModel& m = ctx.model();
  const Element star = hodge_star(ctx, a);
  if (kind == HarmonicKind::bott_chern) {
    return m.del(a).is_zero() && m.delbar(a).is_zero() && m.ddbar(star).is_zero();
  }
  return m.ddbar(a).is_zero() && m.del(star).is_zero() && m.delbar(star).is_zero();
}

namespace {

/// Linearised form of the antilinear condition op(*x) = 0 on block (chi,p,q):
/// column K is |e_K|^2 s_K conj(op(f_{chi^-1} e_{K^c})).
SparseMatrix starred_condition(const MetricContext& ctx, OpKind kind, const Character& chi, int p, int q) {
  const int n = ctx.model().n();
  const MonomialBasis src(n, p, q);
  const MonomialBasis dual(n, n - p, n - q);
  const OperatorBlock blk = operator_block(ctx.model(), kind, chi.inverse(), n - p, n - q);
  SparseMatrix out(blk.matrix.rows, src.size());
  for (int j = 0; j < src.size(); ++j) {
    const FormMonomial& k = src[j];
    Scalar c(ctx.norm2(k));
    if (ctx.complement_sign(k) < 0) c = -c;
    SparseVector col = blk.matrix.columns[dual.index_of(ctx.complement(k))].conj();
    col *= c;
    out.columns[j] = std::move(col);
  }
  return out;
}

}  // namespace

std::vector<Element> harmonic_basis(const MetricContext& ctx, HarmonicKind kind, int p, int q,
                                    const std::vector<Character>& s) {
  const ManifoldModel& m = ctx.model();
  const MonomialBasis basis(m.n(), p, q);
  std::vector<Element> out;
  for (const auto& chi : close_under_inverse(s)) {
    std::vector<SparseVector> ker;
    if (kind == HarmonicKind::bott_chern) {
      const SparseMatrix a = operator_block(m, OpKind::del, chi, p, q).matrix;
      const SparseMatrix b = operator_block(m, OpKind::delbar, chi, p, q).matrix;
      const SparseMatrix c = starred_condition(ctx, OpKind::ddbar, chi, p, q);
      ker = joint_kernel({&a, &b, &c});
    } else {
      const SparseMatrix a = operator_block(m, OpKind::ddbar, chi, p, q).matrix;
      const SparseMatrix b = starred_condition(ctx, OpKind::del, chi, p, q);
      const SparseMatrix c = starred_condition(ctx, OpKind::delbar, chi, p, q);
      ker = joint_kernel({&a, &b, &c});
    }
    for (const auto& v : ker) out.push_back(from_coordinates(v, chi, basis));
  }
  return out;
}

FormalityReport bc_formality_check(const MetricContext& ctx, const std::vector<Character>& s) {
  const int n = ctx.model().n();
  std::vector<Element> basis;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      auto part = harmonic_basis(ctx, HarmonicKind::bott_chern, p, q, s);
      basis.insert(basis.end(), part.begin(), part.end());
    }
  }
  FormalityReport report;
  report.basis_size = static_cast<int>(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      ++report.pairs_checked;
      const Element prod = wedge(basis[i], basis[j]);
      if (!is_harmonic(ctx, prod, HarmonicKind::bott_chern)) {
        report.pass = false;
        report.failing_pair.emplace(basis[i], basis[j]);
        report.failing_product = prod;
        return report;
      }
    }
  }
  return report;
}

namespace {

int space_dim(int n, int p, int q) {
  if (p < 0 || q < 0 || p > n || q > n) return 0;
  return static_cast<int>(binomial(n, p) * binomial(n, q));
}

class LaplacianBuilder {
 public:
  LaplacianBuilder(const MetricContext& ctx, const Character& chi) : ctx_(ctx), chi_(chi) {}

  /// del (holo=true) or delbar from (p,q), with zero-size shapes outside range.
  SparseMatrix op(bool holo, int p, int q) const {
    const int n = ctx_.model().n();
    const int tp = holo ? p + 1 : p;
    const int tq = holo ? q : q + 1;
    if (space_dim(n, p, q) == 0 || space_dim(n, tp, tq) == 0) {
      return SparseMatrix(space_dim(n, tp, tq), space_dim(n, p, q));
    }
    return operator_block(ctx_.model(), holo ? OpKind::del : OpKind::delbar, chi_, p, q).matrix;
  }

  SparseMatrix adj(bool holo, int p, int q) const {
    const int tp = holo ? p + 1 : p;
    const int tq = holo ? q : q + 1;
    return adjoint(op(holo, p, q), ctx_.gram(p, q), ctx_.gram(tp, tq));
  }

 private:
  const MetricContext& ctx_;
  Character chi_;
};

SparseMatrix chain(std::initializer_list<SparseMatrix> ms) {
  // Leftmost factor is applied last.
  auto it = ms.end();
  SparseMatrix acc = *--it;
  while (it != ms.begin()) {
    --it;
    acc = multiply(*it, acc);
  }
  return acc;
}

}  // namespace

SparseMatrix laplacian_block(const MetricContext& ctx, HarmonicKind kind, const Character& chi, int p,
                             int q) {
  const LaplacianBuilder b(ctx, chi);
  const bool D = true;
  const bool B = false;
  // d1 = del o delbar o delbar* o del*, d2 = delbar* o del* o del o delbar
  const SparseMatrix t1 = chain({b.op(D, p - 1, q), b.op(B, p - 1, q - 1), b.adj(B, p - 1, q - 1),
                                 b.adj(D, p - 1, q)});
  const SparseMatrix t2 = chain({b.adj(B, p, q), b.adj(D, p, q + 1), b.op(D, p, q + 1), b.op(B, p, q)});
  if (kind == HarmonicKind::bott_chern) {
    const SparseMatrix t3 = chain({b.adj(B, p, q), b.op(D, p - 1, q + 1), b.adj(D, p - 1, q + 1),
                                   b.op(B, p, q)});
    const SparseMatrix t4 = chain({b.adj(D, p, q), b.op(B, p + 1, q - 1), b.adj(B, p + 1, q - 1),
                                   b.op(D, p, q)});
    const SparseMatrix t5 = chain({b.adj(B, p, q), b.op(B, p, q)});
    const SparseMatrix t6 = chain({b.adj(D, p, q), b.op(D, p, q)});
    return add(add(add(t1, t2), add(t3, t4)), add(t5, t6));
  }
  const SparseMatrix t3 = chain({b.op(D, p - 1, q), b.adj(D, p - 1, q)});
  const SparseMatrix t4 = chain({b.op(B, p, q - 1), b.adj(B, p, q - 1)});
  const SparseMatrix t5 = chain({b.op(D, p - 1, q), b.adj(B, p - 1, q), b.op(B, p - 1, q),
                                 b.adj(D, p - 1, q)});
  const SparseMatrix t6 = chain({b.op(B, p, q - 1), b.adj(D, p, q - 1), b.op(D, p, q - 1),
                                 b.adj(B, p, q - 1)});
  return add(add(add(t1, t2), add(t3, t4)), add(t5, t6));
}

}  // namespace solvcoh

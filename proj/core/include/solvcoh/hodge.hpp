#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcoh/cohomology.hpp"
#include "solvcoh/model.hpp"

namespace solvcoh {

enum class HarmonicKind { bott_chern, aeppli };
std::string to_string(HarmonicKind k);

/// Diagonal-metric data for the Hodge star and the L2 product. The volume
/// form is the unit top monomial and the total volume is normalised to 1.
class MetricContext {
 public:
  explicit MetricContext(const ManifoldModel& m);

  const ManifoldModel& model() const { return *model_; }
  FormMonomial volume() const { return volume_; }
  Element volume_form() const { return Element::monomial(model_->n(), volume_); }
  /// |e_K|^2 = prod over holomorphic and antiholomorphic indices of 1/m_j.
  Rational norm2(const FormMonomial& k) const;
  /// Sign s with e_K ^ e_{K^c} = s * volume.
  int complement_sign(const FormMonomial& k) const;
  FormMonomial complement(const FormMonomial& k) const;
  /// |e_K|^2 for every monomial of bidegree (p,q), in basis order.
  std::vector<Rational> gram(int p, int q) const;

 private:
  const ManifoldModel* model_;
  FormMonomial volume_;
  std::vector<Rational> inverse_metric_;
};

/// C-antilinear star: *(c f_chi e_K) = conj(c) f_{chi^-1} |e_K|^2 s_K e_{K^c}.
Element hodge_star(const MetricContext& ctx, const Element& a);
/// Pointwise Hermitian product: a degree-0 element whose characters are
/// chi * psi^-1. wedge(a, *b) = pointwise_product(a, b) * volume.
Element pointwise_product(const MetricContext& ctx, const Element& a, const Element& b);
/// L2 product, antilinear in b. Only trivial-character pointwise terms survive.
Scalar inner_product(const MetricContext& ctx, const Element& a, const Element& b);

/// Throws std::invalid_argument when a is not bidegree-homogeneous. The zero
/// form is harmonic.
bool is_harmonic(const MetricContext& ctx, const Element& a, HarmonicKind kind);

/// Solutions of the three first-order harmonicity conditions per
/// character block at (p,q).
std::vector<Element> harmonic_basis(const MetricContext& ctx, HarmonicKind kind, int p, int q,
                                    const std::vector<Character>& s);

struct FormalityReport {
  bool pass = true;
  long pairs_checked = 0;
  int basis_size = 0;
  std::optional<std::pair<Element, Element>> failing_pair;
  Element failing_product;
};

/// Wedges all pairs of Bott-Chern harmonic basis forms over s and tests each
/// product for Bott-Chern harmonicity; stops at the first failure.
FormalityReport bc_formality_check(const MetricContext& ctx, const std::vector<Character>& s);

/// Matrix of the fourth-order Laplacian on block (chi,p,q), assembled from
/// the first-order blocks and their adjoints for the L2 product.
SparseMatrix laplacian_block(const MetricContext& ctx, HarmonicKind kind, const Character& chi, int p,
                             int q);

}  // namespace solvcoh

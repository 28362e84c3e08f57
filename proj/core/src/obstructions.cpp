#include "solvcoh/obstructions.hpp"

#include <stdexcept>

namespace solvcoh {

std::string to_string(AsthenoFailure f) {
  switch (f) {
    case AsthenoFailure::None: return "None";
    case AsthenoFailure::BetaZero: return "BetaZero";
    case AsthenoFailure::NotTwoZero: return "NotTwoZero";
    case AsthenoFailure::NotSingleCharacter: return "NotSingleCharacter";
    case AsthenoFailure::NotDecomposable: return "NotDecomposable";
    case AsthenoFailure::ScaleInvalid: return "ScaleInvalid";
    case AsthenoFailure::EquationFails: return "EquationFails";
  }
  return "?";
}

std::vector<Element> default_pool(const ManifoldModel& m, const std::vector<Element>& extra) {
  std::vector<Element> pool(extra);
  for (int j = 1; j <= m.n(); ++j) pool.push_back(m.coframe_form(j));
  return pool;
}

namespace {

/// Minimal-norm solution of ddbar eta = target at bidegree (1,1) in the
/// target's character: eta is also required to be orthogonal to ker ddbar.
std::optional<Element> minimal_primitive(const ManifoldModel& m, const Element& target, const Character& chi) {
  const int n = m.n();
  const MonomialBasis src(n, 1, 1);
  const MonomialBasis tgt(n, 2, 2);
  const SparseMatrix a = operator_block(m, OpKind::ddbar, chi, 1, 1).matrix;
  const std::vector<SparseVector> ker = kernel_basis(a);
  std::vector<Rational> gram;
  for (const auto& mono : src.monomials()) {
    Rational r(1);
    for (int i : mono.holo_indices()) r /= m.metric()[i - 1];
    for (int i : mono.anti_indices()) r /= m.metric()[i - 1];
    gram.push_back(r);
  }
  // Rows of the orthogonality constraints <eta, k> = 0.
  std::vector<std::vector<SparseVector::Entry>> cols(src.size());
  for (std::size_t r = 0; r < ker.size(); ++r) {
    for (const auto& [j, c] : ker[r].entries()) cols[j].emplace_back(a.rows + static_cast<int>(r), c.conj() * Scalar(gram[j]));
  }
  SparseMatrix full(a.rows + static_cast<int>(ker.size()), src.size());
  for (int j = 0; j < src.size(); ++j) {
    std::vector<SparseVector::Entry> e = a.columns[j].entries();
    e.insert(e.end(), cols[j].begin(), cols[j].end());
    full.columns[j] = SparseVector::from_entries(std::move(e));
  }
  const auto x = solve(full, to_coordinates(target, chi, tgt));
  if (!x) return std::nullopt;
  return from_coordinates(*x, chi, src);
}

}  // namespace

bool is_decomposable(const Element& beta) {
  if (beta.is_zero()) return false;
  const auto bd = beta.bidegree();
  if (!bd || *bd != std::pair<int, int>{2, 0}) return false;
  const int n = beta.dim();
  SparseMatrix b(n, n);
  std::vector<std::vector<SparseVector::Entry>> cols(n);
  for (const auto& [key, c] : beta.terms()) {
    const auto idx = key.mono.holo_indices();
    const int i = idx[0] - 1;
    const int j = idx[1] - 1;
    cols[j].emplace_back(i, c);
    cols[i].emplace_back(j, -c);
  }
  for (int j = 0; j < n; ++j) b.columns[j] = SparseVector::from_entries(std::move(cols[j]));
  return rank(b) == 2;
}

std::vector<AsthenoCertificate> astheno_obstruction_scan(const ManifoldModel& m,
                                                         const std::vector<Element>& pool) {
  for (const auto& t : pool) {
    const auto bd = t.bidegree();
    if (!bd || *bd != std::pair<int, int>{1, 0}) {
      throw std::invalid_argument("pool element " + m.format(t) + " is not a nonzero (1,0)-form");
    }
  }
  std::vector<AsthenoCertificate> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const Element beta = wedge(pool[i], pool[j]);
      if (beta.is_zero() || beta.characters().size() != 1) continue;
      const Element target = wedge(beta, conjugate(beta));
      const auto eta = minimal_primitive(m, target, *target.characters().begin());
      if (!eta) continue;
      out.push_back(AsthenoCertificate{pool[i], pool[j], beta, *eta, Rational(1)});
    }
  }
  return out;
}

AsthenoCheck verify_astheno_certificate(const ManifoldModel& m, const AsthenoCertificate& c) {
  AsthenoCheck chk;
  auto fail = [&](AsthenoFailure f) {
    chk.failure = f;
    return chk;
  };
  if (c.beta.is_zero()) return fail(AsthenoFailure::BetaZero);
  const auto bd = c.beta.bidegree();
  if (!bd || *bd != std::pair<int, int>{2, 0}) return fail(AsthenoFailure::NotTwoZero);
  if (c.beta.characters().size() != 1) return fail(AsthenoFailure::NotSingleCharacter);
  if (!is_decomposable(c.beta)) return fail(AsthenoFailure::NotDecomposable);
  if (sgn(c.scale) == 0) return fail(AsthenoFailure::ScaleInvalid);
  const Element rhs = wedge(c.beta, conjugate(c.beta)) * Scalar(c.scale);
  if (!(m.ddbar(c.eta) == rhs)) return fail(AsthenoFailure::EquationFails);
  chk.ok = true;
  return chk;
}

std::string astheno_proof_sketch(const ManifoldModel& m, const AsthenoCertificate& c) {
  const int n = m.n();
  const std::string s = to_string(c.scale);
  std::string out;
  out += "beta = " + m.format(c.beta) + " is a nonzero simple (2,0)-form.\n";
  out += "ddbar(" + m.format(c.eta) + ") = " + (s == "1" ? "" : s + " * ") + "beta ^ conj(beta).\n";
  out += "If omega were astheno-Kaehler, ddbar(omega^" + std::to_string(n - 2) + ") = 0, and Stokes gives\n";
  out += "  0 = int eta ^ ddbar(omega^" + std::to_string(n - 2) + ") = " + (s == "1" ? "" : s + " * ") +
         "int beta ^ conj(beta) ^ omega^" + std::to_string(n - 2) + ".\n";
  out += "omega^" + std::to_string(n - 2) +
         " is transverse and beta is simple, so the right-hand side is nonzero: no astheno-Kaehler metric exists.\n";
  return out;
}

CanonicalReport canonical_section_check(const ManifoldModel& m) {
  CanonicalReport r;
  FormMonomial top{m.volume_monomial().holo, 0};
  r.top_form = Element::monomial(m.n(), top);
  r.dbar_top = m.delbar(r.top_form);
  r.holomorphic = r.dbar_top.is_zero();
  const std::string name = top.str(m.coframe());
  if (r.holomorphic) {
    r.kodaira_dimension = 0;
    r.text = "delbar(" + name + ") = 0\n"
             "invariant canonical section is holomorphic\n"
             "invariant plurigenera: P_r = 1 for all r >= 1\n"
             "Kodaira dimension (invariant level): 0\n";
  } else {
    r.text = "delbar(" + name + ") = " + m.format(r.dbar_top) + "\n"
             "invariant canonical section is not holomorphic\n";
  }
  return r;
}

Json astheno_to_json(const ManifoldModel& m, const AsthenoCertificate& c) {
  const auto labels = m.character_labels();
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "astheno";
  j["model"] = model_to_json(m.data());
  j["theta1"] = element_to_json(c.theta1, labels);
  j["theta2"] = element_to_json(c.theta2, labels);
  j["beta"] = element_to_json(c.beta, labels);
  j["eta"] = element_to_json(c.eta, labels);
  j["scale"] = rational_to_json(c.scale);
  return j;
}

AsthenoCertificate astheno_from_json(const Json& j, std::optional<ManifoldModel>& model_out) {
  try {
    if (!j.is_object() || j.value("kind", "") != "astheno") {
      throw ModelError(ValidationErrorKind::ParseError, "not an astheno certificate");
    }
    model_out.emplace(ManifoldModel::create(model_data_from_json(j.at("model"))));
    const auto labels = model_out->character_labels();
    const int n = model_out->n();
    AsthenoCertificate c;
    c.theta1 = j.contains("theta1") ? element_from_json(j.at("theta1"), n, labels) : Element(n);
    c.theta2 = j.contains("theta2") ? element_from_json(j.at("theta2"), n, labels) : Element(n);
    c.beta = element_from_json(j.at("beta"), n, labels);
    c.eta = element_from_json(j.at("eta"), n, labels);
    c.scale = rational_from_json(j.at("scale"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(ValidationErrorKind::ParseError, e.what());
  }
}

}  // namespace solvcoh

#include "solvcoh/massey.hpp"

#include <algorithm>
#include <map>

namespace solvcoh {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::vanishes: return "vanishes";
    case Verdict::non_vanishing: return "non_vanishing";
    case Verdict::undefined: return "undefined";
  }
  return "?";
}

namespace {

Scalar parity(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

bool in_range(int n, Bidegree b) { return b.p >= 0 && b.q >= 0 && b.p <= n && b.q <= n; }

Bidegree bidegree_of(const Element& e, const char* name) {
  const auto bd = e.bidegree();
  if (!bd) {
    throw MasseyInputError(std::string(name) + " must be a nonzero bidegree-homogeneous form");
  }
  return {bd->first, bd->second};
}

void require_bc_closed(const ManifoldModel& m, const Element& e, const char* name) {
  if (!m.del(e).is_zero() || !m.delbar(e).is_zero()) {
    throw MasseyInputError(std::string(name) + " is not a Bott-Chern cocycle");
  }
}

std::vector<Character> merge_characters(std::vector<Character> s,
                                        std::initializer_list<const Element*> forms) {
  for (const Element* e : forms) {
    for (const auto& c : e->characters()) s.push_back(c);
  }
  return close_under_inverse(std::move(s));
}

std::vector<std::string> hypotheses_for(const ManifoldModel& m, const std::vector<Character>& chars) {
  std::vector<std::string> out;
  std::string list;
  for (const auto& c : chars) {
    list += (list.empty() ? "" : ", ") + (c.is_trivial() ? std::string("1") : character_str(c, m.character_labels()));
  }
  out.push_back("verdict computed at model level over the characters {" + list + "}");
  if (check_nilpotent_J(m)) {
    out.push_back("nilpotent complex structure: invariant forms compute Bott-Chern and Aeppli cohomology");
  } else {
    out.push_back("the complex spanned by the declared characters computes Bott-Chern and Aeppli cohomology");
  }
  return out;
}

/// Characters c * chi^-1 for c in the functional's support and chi in a's.
std::set<Character> needed_characters(const Element& y, const Element& a) {
  std::set<Character> out;
  for (const auto& c : y.characters()) {
    for (const auto& chi : a.characters()) out.insert(c * chi.inverse());
  }
  return out;
}

/// Finds w with w(ddbar x) = y(a ^ x) (left) or y(x ^ a) (right) for every
/// monomial x in the needed character blocks at `domain`.
std::optional<Element> factor_through_ddbar(const ManifoldModel& m, const Element& y, const Element& a,
                                            bool left, Bidegree domain) {
  Element w(m.n());
  if (a.is_zero() || !in_range(m.n(), domain)) return w;
  const MonomialBasis dom(m.n(), domain.p, domain.q);
  for (const auto& psi : needed_characters(y, a)) {
    std::vector<SparseVector::Entry> l;
    for (int j = 0; j < dom.size(); ++j) {
      const Element x = Element::monomial(m.n(), dom[j], 1, psi);
      const Scalar v = evaluate_functional(y, left ? wedge(a, x) : wedge(x, a));
      if (!v.is_zero()) l.emplace_back(j, v);
    }
    if (l.empty()) continue;
    const OperatorBlock blk = operator_block(m, OpKind::ddbar, psi, domain.p, domain.q);
    if (blk.targets.empty()) return std::nullopt;
    const MonomialBasis tgt(m.n(), blk.targets.front().p, blk.targets.front().q);
    const SparseMatrix rows = blk.matrix.transpose();
    Echelon e;
    for (int i = 0; i < rows.cols; ++i) e.insert(rows.columns[i], SparseVector::unit(i));
    SparseVector combo;
    if (!e.reduce(SparseVector::from_entries(std::move(l)), &combo).empty()) return std::nullopt;
    for (const auto& [i, c] : combo.entries()) w.add_term(psi, tgt[i], -c);
  }
  return w;
}

bool check_factorization(const ManifoldModel& m, const Element& y, const Element& a, const Element& w,
                         bool left, Bidegree domain) {
  if (a.is_zero() || !in_range(m.n(), domain)) return true;
  const MonomialBasis dom(m.n(), domain.p, domain.q);
  for (const auto& psi : needed_characters(y, a)) {
    for (const auto& mono : dom.monomials()) {
      const Element x = Element::monomial(m.n(), mono, 1, psi);
      const Scalar lhs = evaluate_functional(y, left ? wedge(a, x) : wedge(x, a));
      if (lhs != evaluate_functional(w, m.ddbar(x))) return false;
    }
  }
  return true;
}

SpanSpec exact_span(Bidegree target) {
  SpanSpec s;
  s.ops.push_back({OpKind::del, {target.p - 1, target.q}});
  s.ops.push_back({OpKind::delbar, {target.p, target.q - 1}});
  return s;
}

void decide(const MetricContext& ctx, MasseyResult& r) {
  const ManifoldModel& m = ctx.model();
  const Bidegree rb = r.representative_bidegree;
  if (r.representative.is_zero()) {
    const Indeterminacy ind = indeterminacy_subspace(ctx, r.a12, r.a34, r.b12, r.b23, r.b34, r.characters);
    r.indeterminacy = ind.elements;
    r.indeterminacy_factors = ind.factors;
    r.indeterminacy_left = ind.left_count;
    r.verdict = Verdict::vanishes;
    SpanSpec spec = exact_span(rb);
    spec.fixed = r.indeterminacy;
    r.vanishing_witness = solve_membership(m, r.representative, spec).witness;
    return;
  }
  std::vector<Character> chars = r.characters;
  for (int round = 0; round < 6; ++round) {
    const Indeterminacy ind = indeterminacy_subspace(ctx, r.a12, r.a34, r.b12, r.b23, r.b34, chars);
    r.indeterminacy = ind.elements;
    r.indeterminacy_factors = ind.factors;
    r.indeterminacy_left = ind.left_count;
    r.characters = chars;
    SpanSpec spec = exact_span(rb);
    spec.fixed = r.indeterminacy;
    spec.characters = chars;
    const MembershipResult mem = solve_membership(m, r.representative, spec);
    if (mem.member) {
      r.verdict = Verdict::vanishes;
      r.vanishing_witness = mem.witness;
      r.certificate.reset();
      return;
    }
    r.verdict = Verdict::non_vanishing;
    const Element& y = mem.functional;
    std::set<Character> need = needed_characters(y, r.a12);
    for (const auto& c : needed_characters(y, r.a34)) need.insert(c);
    const bool closed = std::all_of(need.begin(), need.end(), [&](const Character& c) {
      return std::find(chars.begin(), chars.end(), c) != chars.end();
    });
    NonVanishingCertificate cert{y, m.zero(), m.zero(), mem.target_value};
    const Bidegree d1{r.b23.p + r.b34.p - 1, r.b23.q + r.b34.q - 1};
    const Bidegree d2{r.b12.p + r.b23.p - 1, r.b12.q + r.b23.q - 1};
    auto w12 = closed ? factor_through_ddbar(m, y, r.a12, true, d1) : std::nullopt;
    auto w34 = closed ? factor_through_ddbar(m, y, r.a34, false, d2) : std::nullopt;
    if (w12 && w34) {
      cert.witness12 = *w12;
      cert.witness34 = *w34;
      r.certificate = cert;
      return;
    }
    r.certificate = cert;
    std::vector<Character> grown(chars);
    grown.insert(grown.end(), need.begin(), need.end());
    grown = close_under_inverse(std::move(grown));
    if (grown == chars) break;
    chars = std::move(grown);
  }
  r.hypotheses.push_back("dual certificate incomplete: the functional does not factor through ddbar");
}

}  // namespace

Indeterminacy indeterminacy_subspace(const MetricContext& ctx, const Element& a12, const Element& a34,
                                     Bidegree b12, Bidegree b23, Bidegree b34,
                                     const std::vector<Character>& s) {
  const int n = ctx.model().n();
  Indeterminacy out;
  const Bidegree d1{b23.p + b34.p - 1, b23.q + b34.q - 1};
  if (!a12.is_zero() && in_range(n, d1)) {
    for (auto& h : harmonic_basis(ctx, HarmonicKind::aeppli, d1.p, d1.q, s)) {
      Element g = wedge(a12, h);
      if (g.is_zero()) continue;
      out.elements.push_back(std::move(g));
      out.factors.push_back(std::move(h));
    }
  }
  out.left_count = static_cast<int>(out.elements.size());
  const Bidegree d2{b12.p + b23.p - 1, b12.q + b23.q - 1};
  if (!a34.is_zero() && in_range(n, d2)) {
    for (auto& h : harmonic_basis(ctx, HarmonicKind::aeppli, d2.p, d2.q, s)) {
      Element g = wedge(h, a34);
      if (g.is_zero()) continue;
      out.elements.push_back(std::move(g));
      out.factors.push_back(std::move(h));
    }
  }
  return out;
}

MasseyResult triple_abc_massey(const MetricContext& ctx, const Element& a12, const Element& a23,
                               const Element& a34, const std::vector<Character>& s) {
  const ManifoldModel& m = ctx.model();
  MasseyResult r;
  r.a12 = a12;
  r.a23 = a23;
  r.a34 = a34;
  r.b12 = bidegree_of(a12, "a12");
  r.b23 = bidegree_of(a23, "a23");
  r.b34 = bidegree_of(a34, "a34");
  require_bc_closed(m, a12, "a12");
  require_bc_closed(m, a23, "a23");
  require_bc_closed(m, a34, "a34");
  const Element u = wedge(a12, a23) * parity(r.b12.p + r.b12.q);
  const Element v = wedge(a23, a34) * parity(r.b23.p + r.b23.q);
  r.characters = merge_characters(s, {&a12, &a23, &a34, &u, &v});
  r.hypotheses = hypotheses_for(m, r.characters);
  r.representative_bidegree = {r.b12.p + r.b23.p + r.b34.p - 1, r.b12.q + r.b23.q + r.b34.q - 1};

  const std::pair<const Element*, Bidegree> products[2] = {
      {&u, {r.b12.p + r.b23.p - 1, r.b12.q + r.b23.q - 1}},
      {&v, {r.b23.p + r.b34.p - 1, r.b23.q + r.b34.q - 1}}};
  Element* primitives[2] = {&r.f13, &r.f24};
  for (int i = 0; i < 2; ++i) {
    SpanSpec spec;
    spec.ops.push_back({OpKind::ddbar, products[i].second});
    const MembershipResult mem = solve_membership(m, *products[i].first, spec);
    if (!mem.member) {
      r.verdict = Verdict::undefined;
      r.obstruction_index = i + 1;
      r.obstruction = *products[i].first;
      r.obstruction_functional = mem.functional;
      r.undefined_reason = i == 0 ? "a12 ^ a23 is not ddbar-exact" : "a23 ^ a34 is not ddbar-exact";
      return r;
    }
    *primitives[i] = mem.witness.preimages.front().preimage;
  }
  r.representative = wedge(a12, r.f24) * parity(r.b12.p + r.b12.q) -
                     wedge(r.f13, a34) * parity(r.b23.p + r.b23.q);
  decide(ctx, r);
  return r;
}

MasseyResult triple_abc_massey_with_primitives(const MetricContext& ctx, const Element& a12,
                                               const Element& a23, const Element& a34,
                                               const Element& f13, const Element& f24,
                                               const std::vector<Character>& s) {
  const ManifoldModel& m = ctx.model();
  MasseyResult r;
  r.a12 = a12;
  r.a23 = a23;
  r.a34 = a34;
  r.b12 = bidegree_of(a12, "a12");
  r.b23 = bidegree_of(a23, "a23");
  r.b34 = bidegree_of(a34, "a34");
  require_bc_closed(m, a12, "a12");
  require_bc_closed(m, a23, "a23");
  require_bc_closed(m, a34, "a34");
  const Element u = wedge(a12, a23) * parity(r.b12.p + r.b12.q);
  const Element v = wedge(a23, a34) * parity(r.b23.p + r.b23.q);
  if (!(m.ddbar(f13) == u) || !(m.ddbar(f24) == v)) {
    throw MasseyInputError("supplied primitives do not satisfy the ddbar relations");
  }
  r.characters = merge_characters(s, {&a12, &a23, &a34, &u, &v, &f13, &f24});
  r.hypotheses = hypotheses_for(m, r.characters);
  r.representative_bidegree = {r.b12.p + r.b23.p + r.b34.p - 1, r.b12.q + r.b23.q + r.b34.q - 1};
  r.f13 = f13;
  r.f24 = f24;
  r.representative = wedge(a12, f24) * parity(r.b12.p + r.b12.q) -
                     wedge(f13, a34) * parity(r.b23.p + r.b23.q);
  decide(ctx, r);
  return r;
}

PairingCertificate pairing_certificate(const MetricContext& ctx, const MasseyResult& r) {
  if (r.representative.is_zero()) throw std::invalid_argument("pairing certificate of a zero representative");
  const ManifoldModel& m = ctx.model();
  PairingCertificate pc;
  pc.gamma = r.representative;
  const Bidegree rb = r.representative_bidegree;
  if (!is_harmonic(ctx, pc.gamma, HarmonicKind::aeppli)) {
    const std::vector<Character> chars = close_under_inverse(
        std::vector<Character>(r.representative.characters().begin(), r.representative.characters().end()));
    const auto basis = harmonic_basis(ctx, HarmonicKind::aeppli, rb.p, rb.q, chars);
    SpanSpec spec = exact_span(rb);
    spec.fixed = basis;
    const MembershipResult mem = solve_membership(m, r.representative, spec);
    if (!mem.member) {
      pc.failure = "the representative has no Aeppli-harmonic representative in its characters";
      return pc;
    }
    Element h(m.n());
    for (std::size_t i = 0; i < basis.size(); ++i) h += basis[i] * mem.witness.fixed_coefficients[i];
    pc.gamma = h;
    pc.substituted = true;
  }
  const Element star = hodge_star(ctx, pc.gamma);
  pc.coclosed = m.del(star).is_zero() && m.delbar(star).is_zero();
  pc.norm = inner_product(ctx, pc.gamma, pc.gamma);
  pc.representative_pairing = inner_product(ctx, r.representative, pc.gamma);
  bool ok = pc.coclosed && !pc.norm.is_zero() && !pc.representative_pairing.is_zero();
  if (!pc.coclosed) pc.failure = "*gamma is not d-closed";
  if (pc.norm.is_zero()) pc.failure = "harmonic representative is zero";
  for (std::size_t i = 0; i < r.indeterminacy.size(); ++i) {
    const Element pw = pointwise_product(ctx, r.indeterminacy[i], pc.gamma);
    PairingCertificate::Pairing pr{PairingKind::pointwise_zero, {}};
    if (!pw.is_zero()) {
      for (const auto& c : pw.characters()) pr.characters.push_back(c);
      if (pw.coefficient(Character{}, FormMonomial{}).is_zero()) {
        pr.kind = PairingKind::character_orthogonal;
        pc.orthogonality_characters.insert(pr.characters.begin(), pr.characters.end());
      } else {
        pr.kind = PairingKind::nonzero;
        if (ok) pc.failure = "indeterminacy generator " + std::to_string(i) + " pairs nontrivially with gamma";
        ok = false;
      }
    }
    pc.pairings.push_back(std::move(pr));
  }
  pc.applies = ok;
  return pc;
}

CertificateCheck verify_massey_certificate(const ManifoldModel& m, const MasseyResult& r) {
  CertificateCheck chk;
  auto fail = [&](const std::string& why) {
    chk.ok = false;
    chk.failures.push_back(why);
  };
  const Element* inputs[3] = {&r.a12, &r.a23, &r.a34};
  const Bidegree bds[3] = {r.b12, r.b23, r.b34};
  const char* names[3] = {"a12", "a23", "a34"};
  for (int i = 0; i < 3; ++i) {
    const auto bd = inputs[i]->bidegree();
    if (!bd || bd->first != bds[i].p || bd->second != bds[i].q) fail(std::string(names[i]) + " bidegree mismatch");
    if (!m.del(*inputs[i]).is_zero() || !m.delbar(*inputs[i]).is_zero()) {
      fail(std::string(names[i]) + " is not a Bott-Chern cocycle");
    }
  }
  if (!chk.ok) return chk;
  const Element u = wedge(r.a12, r.a23) * parity(r.b12.p + r.b12.q);
  const Element v = wedge(r.a23, r.a34) * parity(r.b23.p + r.b23.q);
  if (r.verdict == Verdict::undefined) {
    const Element& obs = r.obstruction_index == 1 ? u : v;
    const Bidegree dom = r.obstruction_index == 1 ? Bidegree{r.b12.p + r.b23.p - 1, r.b12.q + r.b23.q - 1}
                                                  : Bidegree{r.b23.p + r.b34.p - 1, r.b23.q + r.b34.q - 1};
    if (r.obstruction_index < 1 || r.obstruction_index > 2 || !(obs == r.obstruction)) {
      fail("obstruction does not match the cup product");
      return chk;
    }
    SpanSpec spec;
    spec.ops.push_back({OpKind::ddbar, dom});
    if (!verify_functional(m, r.obstruction, spec, r.obstruction_functional)) {
      fail("obstruction functional does not separate the product from im ddbar");
    }
    return chk;
  }
  if (!(m.ddbar(r.f13) == u)) fail("ddbar f13 != (-1)^{p+q} a12 ^ a23");
  if (!(m.ddbar(r.f24) == v)) fail("ddbar f24 != (-1)^{r+s} a23 ^ a34");
  const Element gamma = wedge(r.a12, r.f24) * parity(r.b12.p + r.b12.q) -
                        wedge(r.f13, r.a34) * parity(r.b23.p + r.b23.q);
  if (!(gamma == r.representative)) fail("representative does not match the primitives");
  if (r.indeterminacy.size() != r.indeterminacy_factors.size() ||
      r.indeterminacy_left < 0 || r.indeterminacy_left > static_cast<int>(r.indeterminacy.size())) {
    fail("indeterminacy list is malformed");
    return chk;
  }
  for (std::size_t i = 0; i < r.indeterminacy.size(); ++i) {
    const Element& h = r.indeterminacy_factors[i];
    const Element expect = static_cast<int>(i) < r.indeterminacy_left ? wedge(r.a12, h) : wedge(h, r.a34);
    if (!(expect == r.indeterminacy[i]) || !m.ddbar(h).is_zero()) {
      fail("indeterminacy element " + std::to_string(i) + " is not a product with a ddbar-closed form");
    }
  }
  const Bidegree rb = r.representative_bidegree;
  SpanSpec spec = exact_span(rb);
  spec.fixed = r.indeterminacy;
  if (r.verdict == Verdict::vanishes) {
    if (!r.vanishing_witness || !(r.vanishing_witness->target == r.representative) ||
        !verify_witness(m, spec, *r.vanishing_witness)) {
      fail("vanishing witness does not reproduce the representative");
    }
    return chk;
  }
  if (!r.certificate) {
    fail("non_vanishing verdict without a certificate");
    return chk;
  }
  const NonVanishingCertificate& c = *r.certificate;
  if (c.value.is_zero() || evaluate_functional(c.functional, r.representative) != c.value) {
    fail("functional value on the representative is wrong or zero");
  }
  if (!verify_functional(m, r.representative, spec, c.functional)) {
    fail("functional does not annihilate the declared spanning set");
  }
  const Bidegree d1{r.b23.p + r.b34.p - 1, r.b23.q + r.b34.q - 1};
  const Bidegree d2{r.b12.p + r.b23.p - 1, r.b12.q + r.b23.q - 1};
  if (!check_factorization(m, c.functional, r.a12, c.witness12, true, d1)) {
    fail("y(a12 ^ x) does not factor through ddbar x");
  }
  if (!check_factorization(m, c.functional, r.a34, c.witness34, false, d2)) {
    fail("y(x ^ a34) does not factor through ddbar x");
  }
  return chk;
}

// ---------------------------------------------------------------------------

namespace {

Json bidegree_json(Bidegree b) { return Json::array({b.p, b.q}); }

Bidegree bidegree_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ModelError(ValidationErrorKind::ParseError, "bad bidegree");
  return {j[0].get<int>(), j[1].get<int>()};
}

OpKind op_from(const std::string& s) {
  if (s == "d") return OpKind::d;
  if (s == "del") return OpKind::del;
  if (s == "delbar") return OpKind::delbar;
  if (s == "ddbar") return OpKind::ddbar;
  throw ModelError(ValidationErrorKind::ParseError, "unknown operator " + s);
}

Verdict verdict_from(const std::string& s) {
  if (s == "vanishes") return Verdict::vanishes;
  if (s == "non_vanishing") return Verdict::non_vanishing;
  if (s == "undefined") return Verdict::undefined;
  throw ModelError(ValidationErrorKind::ParseError, "unknown verdict " + s);
}

}  // namespace

Json massey_to_json(const ManifoldModel& m, const MasseyResult& r) {
  const auto labels = m.character_labels();
  auto el = [&](const Element& e) { return element_to_json(e, labels); };
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "massey";
  j["model"] = model_to_json(m.data());
  Json chars = Json::array();
  for (const auto& c : r.characters) chars.push_back(character_to_json(c, labels));
  j["characters"] = chars;
  j["inputs"] = {{"a12", el(r.a12)}, {"a23", el(r.a23)}, {"a34", el(r.a34)}};
  j["bidegrees"] = {{"a12", bidegree_json(r.b12)}, {"a23", bidegree_json(r.b23)}, {"a34", bidegree_json(r.b34)}};
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::undefined) {
    j["undefined_reason"] = r.undefined_reason;
    j["obstruction_index"] = r.obstruction_index;
    j["obstruction"] = el(r.obstruction);
    j["obstruction_functional"] = el(r.obstruction_functional);
  } else {
    j["primitives"] = {{"f13", el(r.f13)}, {"f24", el(r.f24)}};
    j["representative"] = el(r.representative);
    j["representative_bidegree"] = bidegree_json(r.representative_bidegree);
    Json ind = Json::array();
    for (std::size_t i = 0; i < r.indeterminacy.size(); ++i) {
      ind.push_back({{"side", static_cast<int>(i) < r.indeterminacy_left ? "left" : "right"},
                     {"factor", el(r.indeterminacy_factors[i])},
                     {"element", el(r.indeterminacy[i])}});
    }
    j["indeterminacy"] = ind;
    if (r.certificate) {
      j["certificate"] = {{"functional", el(r.certificate->functional)},
                          {"witness12", el(r.certificate->witness12)},
                          {"witness34", el(r.certificate->witness34)},
                          {"value", scalar_to_json(r.certificate->value)}};
    }
    if (r.vanishing_witness) {
      Json w = Json::object();
      Json fc = Json::array();
      for (const auto& c : r.vanishing_witness->fixed_coefficients) fc.push_back(scalar_to_json(c));
      w["fixed_coefficients"] = fc;
      Json pre = Json::array();
      for (const auto& p : r.vanishing_witness->preimages) {
        pre.push_back({{"op", to_string(p.kind)}, {"preimage", el(p.preimage)}});
      }
      w["preimages"] = pre;
      j["vanishing_witness"] = w;
    }
  }
  j["hypotheses"] = r.hypotheses;
  return j;
}

MasseyResult massey_from_json(const Json& j, std::optional<ManifoldModel>& model_out) {
  try {
    if (!j.is_object() || j.value("kind", "") != "massey") {
      throw ModelError(ValidationErrorKind::ParseError, "not a Massey result");
    }
    model_out.emplace(ManifoldModel::create(model_data_from_json(j.at("model"))));
    const ManifoldModel& m = *model_out;
    const auto labels = m.character_labels();
    auto el = [&](const Json& x) { return element_from_json(x, m.n(), labels); };
    MasseyResult r;
    for (const auto& c : j.at("characters")) r.characters.push_back(character_from_json(c, labels));
    r.a12 = el(j.at("inputs").at("a12"));
    r.a23 = el(j.at("inputs").at("a23"));
    r.a34 = el(j.at("inputs").at("a34"));
    r.b12 = bidegree_from(j.at("bidegrees").at("a12"));
    r.b23 = bidegree_from(j.at("bidegrees").at("a23"));
    r.b34 = bidegree_from(j.at("bidegrees").at("a34"));
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    r.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
    if (r.verdict == Verdict::undefined) {
      r.undefined_reason = j.at("undefined_reason").get<std::string>();
      r.obstruction_index = j.at("obstruction_index").get<int>();
      r.obstruction = el(j.at("obstruction"));
      r.obstruction_functional = el(j.at("obstruction_functional"));
      return r;
    }
    r.f13 = el(j.at("primitives").at("f13"));
    r.f24 = el(j.at("primitives").at("f24"));
    r.representative = el(j.at("representative"));
    r.representative_bidegree = bidegree_from(j.at("representative_bidegree"));
    bool right = false;
    for (const auto& g : j.at("indeterminacy")) {
      const bool is_left = g.at("side").get<std::string>() == "left";
      if (is_left && right) throw ModelError(ValidationErrorKind::ParseError, "indeterminacy order");
      right = right || !is_left;
      if (is_left) ++r.indeterminacy_left;
      r.indeterminacy_factors.push_back(el(g.at("factor")));
      r.indeterminacy.push_back(el(g.at("element")));
    }
    if (j.contains("certificate")) {
      const Json& c = j.at("certificate");
      r.certificate = NonVanishingCertificate{el(c.at("functional")), el(c.at("witness12")),
                                              el(c.at("witness34")), scalar_from_json(c.at("value"))};
    }
    if (j.contains("vanishing_witness")) {
      const Json& w = j.at("vanishing_witness");
      MembershipWitness mw;
      mw.target = r.representative;
      for (const auto& c : w.at("fixed_coefficients")) mw.fixed_coefficients.push_back(scalar_from_json(c));
      for (const auto& p : w.at("preimages")) {
        mw.preimages.push_back({op_from(p.at("op").get<std::string>()), el(p.at("preimage"))});
      }
      r.vanishing_witness = mw;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(ValidationErrorKind::ParseError, e.what());
  }
}

}  // namespace solvcoh

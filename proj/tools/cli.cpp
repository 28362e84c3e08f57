#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "solvcoh/cohomology.hpp"
#include "solvcoh/expression.hpp"
#include "solvcoh/families.hpp"
#include "solvcoh/hodge.hpp"
#include "solvcoh/massey.hpp"
#include "solvcoh/obstructions.hpp"
#include "solvcoh/parallel.hpp"
#include "solvcoh/serialize.hpp"

namespace solvcoh::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "table";
  std::string model_path;
  std::optional<int> char_bound;
  int jobs = 1;
};

bool json_out(const Common& c) { return c.format == "json"; }

std::string read_all(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw ModelError(ValidationErrorKind::ParseError, "cannot open " + path);
  return read_all(f);
}

ManifoldModel load(const Common& c, std::istream& in) { return load_model(read_input(c.model_path, in)); }

std::vector<Character> character_set(const ManifoldModel& m, const Common& c) {
  if (!c.char_bound) return m.default_character_set();
  const int k = static_cast<int>(m.character_labels().size());
  const int b = *c.char_bound;
  if (b < 0) throw UsageError("--char-bound must be nonnegative");
  std::vector<Character> out;
  std::vector<int> e(k, -b);
  if (k == 0) return {Character{}};
  for (;;) {
    out.push_back(Character(e));
    int i = 0;
    while (i < k && e[i] == b) e[i++] = -b;
    if (i == k) break;
    ++e[i];
  }
  return close_under_inverse(out);
}

std::string char_name(const ManifoldModel& m, const Character& c) {
  return c.is_trivial() ? "1" : character_str(c, m.character_labels());
}

Json characters_json(const ManifoldModel& m, const std::vector<Character>& s) {
  Json out = Json::array();
  for (const auto& c : s) out.push_back(character_to_json(c, m.character_labels()));
  return out;
}

Bidegree parse_bidegree(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("bidegree must be written p,q");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("bidegree must be written p,q");
  }
}

std::vector<Bidegree> bidegrees(const ManifoldModel& m, const std::string& spec) {
  if (!spec.empty()) {
    const Bidegree b = parse_bidegree(spec);
    if (b.p < 0 || b.q < 0 || b.p > m.n() || b.q > m.n()) throw UsageError("bidegree out of range");
    return {b};
  }
  std::vector<Bidegree> out;
  for (int p = 0; p <= m.n(); ++p) {
    for (int q = 0; q <= m.n(); ++q) out.push_back({p, q});
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Common& c, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const bool nilpotent = check_nilpotent_J(m);
  if (json_out(c)) {
    Json j = {{"schema", kSchemaVersion},
              {"name", m.name()},
              {"n", m.n()},
              {"valid", true},
              {"checks",
               {{"integrable", true},
                {"d_squared_zero", true},
                {"dlog_closed", true},
                {"unitary_characters", true},
                {"model_stokes", true}}},
              {"nilpotent_J", nilpotent},
              {"characters", characters_json(m, m.default_character_set())}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "model: " << m.name() << " (n = " << m.n() << ")\n";
  out << "integrability (no (0,2) components): pass\n";
  out << "d^2 = 0 on coframe: pass\n";
  out << "character log-derivatives closed: pass\n";
  out << "characters unitary: pass\n";
  out << "model-Stokes (unimodularity surrogate, assumed rather than derived): pass\n";
  out << "nilpotent complex structure: " << (nilpotent ? "yes" : "no") << "\n";
  std::string chars;
  for (const auto& chi : m.default_character_set()) chars += (chars.empty() ? "" : ", ") + char_name(m, chi);
  out << "default character set: {" << chars << "}\n";
  return kOk;
}

int cmd_cohomology(const Common& c, const std::string& theory, const std::string& bd, bool reps,
                   std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const auto s = character_set(m, c);
  std::vector<Theory> theories;
  if (theory == "all") {
    theories = {Theory::dolbeault, Theory::bott_chern, Theory::aeppli, Theory::de_rham};
  } else if (auto t = parse_theory(theory)) {
    theories = {*t};
  } else {
    throw UsageError("unknown theory '" + theory + "'");
  }
  std::vector<CohomologyBasis> bases;
  for (Theory t : theories) {
    if (t == Theory::de_rham) {
      if (!bd.empty()) {
        const Bidegree b = parse_bidegree(bd);
        bases.push_back(de_rham_cohomology(m, s, b.p + b.q));
      } else {
        for (int k = 0; k <= 2 * m.n(); ++k) bases.push_back(de_rham_cohomology(m, s, k));
      }
      continue;
    }
    for (const auto& b : bidegrees(m, bd)) bases.push_back(cohomology(m, t, s, b.p, b.q));
  }
  const auto labels = m.character_labels();
  if (json_out(c)) {
    Json j = {{"schema", kSchemaVersion}, {"model", m.name()}, {"characters", characters_json(m, s)}};
    Json rows = Json::array();
    for (const auto& b : bases) {
      Json r = {{"theory", to_string(b.theory)}};
      if (b.theory == Theory::de_rham) {
        r["degree"] = b.p + b.q;
      } else {
        r["bidegree"] = {b.p, b.q};
      }
      r["dimension"] = b.dimension();
      Json blocks = Json::array();
      for (const auto& blk : b.blocks) {
        if (blk.dimension() == 0) continue;
        Json bj = {{"character", character_to_json(blk.chi, labels)}, {"dimension", blk.dimension()}};
        if (reps) {
          Json rj = Json::array();
          for (const auto& e : blk.representatives) rj.push_back(element_to_json(e, labels));
          bj["representatives"] = rj;
        }
        blocks.push_back(bj);
      }
      r["blocks"] = blocks;
      rows.push_back(r);
    }
    j["cohomology"] = rows;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << format_cohomology_table(m, bases);
  if (reps) {
    for (const auto& b : bases) {
      const std::string deg = b.theory == Theory::de_rham ? std::to_string(b.p + b.q)
                                                          : fmt::format("({},{})", b.p, b.q);
      for (const auto& e : b.representatives()) out << to_string(b.theory) << " " << deg << ": " << m.format(e) << "\n";
    }
  }
  return kOk;
}

int cmd_harmonics(const Common& c, const std::string& kind, const std::string& bd, std::istream& in,
                  std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const MetricContext ctx(m);
  const auto s = character_set(m, c);
  HarmonicKind hk;
  if (kind == "bott_chern" || kind == "bc") {
    hk = HarmonicKind::bott_chern;
  } else if (kind == "aeppli") {
    hk = HarmonicKind::aeppli;
  } else {
    throw UsageError("unknown harmonic kind '" + kind + "'");
  }
  const auto bds = bidegrees(m, bd);
  std::vector<std::vector<Element>> bases(bds.size());
  parallel_for(static_cast<int>(bds.size()), [&](int i) {
    bases[i] = harmonic_basis(ctx, hk, bds[i].p, bds[i].q, s);
  });
  const auto labels = m.character_labels();
  if (json_out(c)) {
    Json j = {{"schema", kSchemaVersion}, {"model", m.name()}, {"kind", to_string(hk)},
              {"characters", characters_json(m, s)}};
    Json rows = Json::array();
    for (std::size_t i = 0; i < bds.size(); ++i) {
      Json forms = Json::array();
      for (const auto& e : bases[i]) forms.push_back(element_to_json(e, labels));
      rows.push_back({{"bidegree", {bds[i].p, bds[i].q}}, {"dimension", bases[i].size()}, {"forms", forms}});
    }
    j["harmonics"] = rows;
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < bds.size(); ++i) {
    out << to_string(hk) << " harmonic (" << bds[i].p << "," << bds[i].q << "): dim " << bases[i].size() << "\n";
    for (const auto& e : bases[i]) out << "  " << m.format(e) << "\n";
  }
  return kOk;
}

int cmd_massey(const Common& c, const std::string& e12, const std::string& e23, const std::string& e34,
               bool pairing, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const MetricContext ctx(m);
  const Element a12 = parse_expression(m, e12);
  const Element a23 = parse_expression(m, e23);
  const Element a34 = parse_expression(m, e34);
  const MasseyResult r = triple_abc_massey(ctx, a12, a23, a34, character_set(m, c));
  std::optional<PairingCertificate> pc;
  if (pairing && r.verdict == Verdict::non_vanishing) pc = pairing_certificate(ctx, r);
  const auto labels = m.character_labels();
  if (json_out(c)) {
    Json j = massey_to_json(m, r);
    if (pc) {
      Json pj = {{"applies", pc->applies}, {"failure", pc->failure}, {"substituted", pc->substituted},
                 {"gamma", element_to_json(pc->gamma, labels)}, {"norm", scalar_to_json(pc->norm)},
                 {"coclosed", pc->coclosed}};
      Json orth = Json::array();
      for (const auto& chi : pc->orthogonality_characters) orth.push_back(character_to_json(chi, labels));
      pj["orthogonality_characters"] = orth;
      j["pairing_certificate"] = pj;
    }
    out << j.dump(2) << "\n";
  } else {
    auto bd = [](Bidegree b) { return fmt::format("({},{})", b.p, b.q); };
    out << "model: " << m.name() << "\n";
    out << "a12: " << m.format(r.a12) << "  " << bd(r.b12) << "\n";
    out << "a23: " << m.format(r.a23) << "  " << bd(r.b23) << "\n";
    out << "a34: " << m.format(r.a34) << "  " << bd(r.b34) << "\n";
    if (r.verdict == Verdict::undefined) {
      out << "verdict: undefined (" << r.undefined_reason << ")\n";
      out << "obstructing product: " << m.format(r.obstruction) << "\n";
    } else {
      out << "f13: " << m.format(r.f13) << "\n";
      out << "f24: " << m.format(r.f24) << "\n";
      out << "representative: " << m.format(r.representative) << "  " << bd(r.representative_bidegree) << "\n";
      out << "indeterminacy generators: " << r.indeterminacy.size() << " (" << r.indeterminacy_left
          << " from a12, " << r.indeterminacy.size() - r.indeterminacy_left << " from a34)\n";
      out << "verdict: " << to_string(r.verdict) << "\n";
      if (r.certificate) {
        out << "dual functional: " << r.certificate->functional.size() << " terms, value "
            << r.certificate->value.str() << "\n";
      }
      if (pc) {
        out << "pairing certificate: " << (pc->applies ? "applies" : "does not apply: " + pc->failure) << "\n";
        out << "  gamma" << (pc->substituted ? " (harmonic representative)" : "") << ": " << m.format(pc->gamma) << "\n";
        out << "  <gamma,gamma> = " << pc->norm.str() << "\n";
        std::string orth;
        for (const auto& chi : pc->orthogonality_characters) orth += (orth.empty() ? "" : ", ") + char_name(m, chi);
        out << "  orthogonality characters: {" << orth << "}\n";
      }
    }
    out << "hypotheses:\n";
    for (const auto& h : r.hypotheses) out << "  - " << h << "\n";
  }
  return r.verdict == Verdict::undefined ? kUndefinedProduct : kOk;
}

Json scan_to_json(const ManifoldModel& m, const std::vector<AsthenoCertificate>& certs) {
  Json j = {{"schema", kSchemaVersion}, {"kind", "astheno_scan"}, {"model", model_to_json(m.data())}};
  Json list = Json::array();
  for (const auto& c : certs) {
    Json cj = astheno_to_json(m, c);
    cj.erase("model");
    cj.erase("schema");
    list.push_back(cj);
  }
  j["certificates"] = list;
  return j;
}

int cmd_astheno(const Common& c, const std::vector<std::string>& pool_exprs, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  std::vector<Element> extra;
  for (const auto& e : pool_exprs) extra.push_back(parse_expression(m, e));
  const auto certs = astheno_obstruction_scan(m, default_pool(m, extra));
  if (json_out(c)) {
    out << scan_to_json(m, certs).dump(2) << "\n";
    return kOk;
  }
  out << "model: " << m.name() << "\n";
  out << "certificates: " << certs.size() << "\n";
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& cert = certs[i];
    out << "[" << i << "] beta = " << m.format(cert.beta) << "; eta = " << m.format(cert.eta)
        << "; scale = " << to_string(cert.scale) << "; verified: "
        << (verify_astheno_certificate(m, cert).ok ? "yes" : "no") << "\n";
    std::istringstream sketch(astheno_proof_sketch(m, cert));
    for (std::string line; std::getline(sketch, line);) out << "    " << line << "\n";
  }
  if (certs.empty()) out << "no obstruction found in the pool\n";
  return kOk;
}

int cmd_certify(const Common& c, const std::string& file, std::istream& in, std::ostream& out) {
  const Json j = parse_json(read_input(file, in));
  const std::string kind = j.is_object() ? j.value("kind", "") : "";
  std::vector<std::string> failures;
  std::string summary;
  if (kind == "massey") {
    std::optional<ManifoldModel> m;
    const MasseyResult r = massey_from_json(j, m);
    const CertificateCheck chk = verify_massey_certificate(*m, r);
    failures = chk.failures;
    summary = "massey verdict " + to_string(r.verdict);
  } else if (kind == "astheno" || kind == "astheno_scan") {
    std::vector<Json> items;
    Json model_json = j.at("model");
    if (kind == "astheno") {
      items.push_back(j);
    } else {
      for (const auto& x : j.at("certificates")) {
        Json full = x;
        full["kind"] = "astheno";
        full["model"] = model_json;
        items.push_back(full);
      }
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::optional<ManifoldModel> m;
      const AsthenoCertificate cert = astheno_from_json(items[i], m);
      const AsthenoCheck chk = verify_astheno_certificate(*m, cert);
      if (!chk.ok) failures.push_back("certificate " + std::to_string(i) + ": " + to_string(chk.failure));
    }
    summary = std::to_string(items.size()) + " astheno certificate(s)";
  } else {
    throw ModelError(ValidationErrorKind::ParseError, "unknown certificate kind '" + kind + "'");
  }
  if (json_out(c)) {
    out << Json({{"schema", kSchemaVersion}, {"kind", kind}, {"verified", failures.empty()}, {"failures", failures}})
               .dump(2)
        << "\n";
  } else {
    out << summary << ": " << (failures.empty() ? "verified" : "REJECTED") << "\n";
    for (const auto& f : failures) out << "  " << f << "\n";
  }
  return failures.empty() ? kOk : kValidationError;
}

int cmd_family(const Common& c, const std::string& family, int n, int mm, const std::string& lambda,
               const std::string& t, const std::string& ks, bool flags, std::ostream& out) {
  ModelData data;
  std::optional<NakamuraFlags> nflags;
  try {
    if (family == "bigalke-rollenske") {
      data = bigalke_rollenske(n);
    } else if (family == "torus") {
      data = torus(n);
    } else if (family == "nakamura") {
      NakamuraParams p{parse_rationals(lambda.empty() ? "1,-1" : lambda), parse_rationals(t.empty() ? "1" : t).at(0)};
      NakamuraModel nm = nakamura(p);
      data = nm.data;
      nflags = nm.flags;
    } else if (family == "semidirect") {
      SemidirectParams p;
      p.n = n;
      p.m = mm;
      p.lambda = parse_rationals(lambda.empty() ? "1" : lambda).at(0);
      if (!ks.empty()) {
        for (const auto& r : parse_rationals(ks)) {
          if (r.get_den() != 1) throw UsageError("--ks takes integers");
          p.ks.push_back(r.get_num().get_si());
        }
      }
      data = semidirect_family(p);
    } else {
      throw UsageError("unknown family '" + family + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ModelError(ValidationErrorKind::InvalidData, e.what());
  }
  const ManifoldModel m = ManifoldModel::create(data);
  if (!flags) {
    out << dump_model(m.data()) << "\n";
    return kOk;
  }
  const bool is_torus = std::all_of(m.data().structure.begin(), m.data().structure.end(),
                                    [](const Element& e) { return e.is_zero(); });
  Json j = {{"schema", kSchemaVersion}, {"family", family}, {"torus", is_torus}};
  if (nflags) {
    j["only_trivial_integral_weights"] = nflags->only_trivial_integral_weights;
    j["disjoint_nonzero_integral_weight"] = nflags->disjoint_nonzero_integral_weight;
    if (nflags->witness) j["witness"] = {{"I", nflags->witness->first}, {"J", nflags->witness->second}};
    j["integrality"] = "formal model";
  }
  j["nilpotent_J"] = check_nilpotent_J(m);
  if (json_out(c)) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : j.items()) {
      if (k == "schema") continue;
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return kOk;
}

int cmd_ddbar(const Common& c, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const auto s = character_set(m, c);
  const DdbarReport r = ddbar_lemma_check(m, s);
  if (json_out(c)) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"bidegree", {row.p, row.q}},
                      {"bott_chern", row.bott_chern},
                      {"dolbeault", row.dolbeault},
                      {"aeppli", row.aeppli},
                      {"rank_bc_to_dolbeault", row.rank_bc_to_dolbeault},
                      {"rank_dolbeault_to_aeppli", row.rank_dolbeault_to_aeppli}});
    }
    out << Json({{"schema", kSchemaVersion}, {"model", m.name()}, {"characters", characters_json(m, s)},
                 {"model_level_ddbar_lemma", r.holds}, {"rows", rows}})
               .dump(2)
        << "\n";
    return kOk;
  }
  out << fmt::format("{:<8} {:>4} {:>4} {:>4} {:>9} {:>9}\n", "(p,q)", "BC", "dbar", "A", "BC->dbar", "dbar->A");
  for (const auto& row : r.rows) {
    out << fmt::format("{:<8} {:>4} {:>4} {:>4} {:>9} {:>9}{}\n", fmt::format("({},{})", row.p, row.q),
                       row.bott_chern, row.dolbeault, row.aeppli, row.rank_bc_to_dolbeault,
                       row.rank_dolbeault_to_aeppli, row.isomorphic() ? "" : "  *");
  }
  out << "model-level ∂∂̄-lemma: " << (r.holds ? "holds" : "fails") << "\n";
  return kOk;
}

int cmd_formality(const Common& c, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const MetricContext ctx(m);
  const FormalityReport r = bc_formality_check(ctx, character_set(m, c));
  const auto labels = m.character_labels();
  if (json_out(c)) {
    Json j = {{"schema", kSchemaVersion}, {"model", m.name()}, {"pass", r.pass},
              {"basis_size", r.basis_size}, {"pairs_checked", r.pairs_checked}};
    if (r.failing_pair) {
      j["failing_pair"] = {element_to_json(r.failing_pair->first, labels),
                           element_to_json(r.failing_pair->second, labels)};
      j["product"] = element_to_json(r.failing_product, labels);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "Bott-Chern harmonic forms: " << r.basis_size << ", pairs checked: " << r.pairs_checked << "\n";
  out << "geometric Bott-Chern formality: " << (r.pass ? "pass" : "fail") << "\n";
  if (r.failing_pair) {
    out << "first failing pair: " << m.format(r.failing_pair->first) << " , " << m.format(r.failing_pair->second)
        << "\nproduct: " << m.format(r.failing_product) << "\n";
  }
  return kOk;
}

int cmd_canonical(const Common& c, std::istream& in, std::ostream& out) {
  const ManifoldModel m = load(c, in);
  const CanonicalReport r = canonical_section_check(m);
  if (json_out(c)) {
    Json j = {{"schema", kSchemaVersion},
              {"model", m.name()},
              {"dbar_top", element_to_json(r.dbar_top, m.character_labels())},
              {"holomorphic", r.holomorphic}};
    if (r.kodaira_dimension) j["kodaira_dimension"] = *r.kodaira_dimension;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << r.text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bott-Chern/Aeppli cohomology and Massey certificates for invariant complex structures",
               "solvcoh"};
  app.require_subcommand(1, 1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", common.jobs, "Worker threads for block computations (0 = all cores)");

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", common.model_path, "Model JSON file (default: stdin)");
    sub->add_option("--char-bound", common.char_bound, "Use all characters with exponents in [-K, K]");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--jobs", common.jobs, "Worker threads");
  };

  auto* validate = app.add_subcommand("validate", "Load a model and report its invariants");
  add_model(validate);

  std::string theory = "all", bidegree;
  bool reps = false;
  auto* coh = app.add_subcommand("cohomology", "Cohomology dimension tables");
  add_model(coh);
  coh->add_option("--theory", theory, "dolbeault, bott_chern, aeppli, de_rham or all");
  coh->add_option("--bidegree", bidegree, "Restrict to one bidegree p,q");
  coh->add_flag("--representatives", reps, "Print representatives");

  std::string kind = "bott_chern";
  auto* harm = app.add_subcommand("harmonics", "Harmonic bases");
  add_model(harm);
  harm->add_option("--kind", kind, "bott_chern or aeppli");
  harm->add_option("--bidegree", bidegree, "Restrict to one bidegree p,q");

  std::string e12, e23, e34;
  bool pairing = false;
  auto* massey = app.add_subcommand("massey", "Triple Aeppli-Bott-Chern-Massey product");
  add_model(massey);
  massey->add_option("--a12", e12, "First class")->required();
  massey->add_option("--a23", e23, "Second class")->required();
  massey->add_option("--a34", e34, "Third class")->required();
  massey->add_flag("--pairing", pairing, "Also build the pairing certificate");

  std::string cert_file;
  auto* certify = app.add_subcommand("certify", "Re-verify a serialized certificate without elimination");
  certify->add_option("file", cert_file, "Certificate JSON (default: stdin)");
  certify->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> pool;
  auto* astheno = app.add_subcommand("astheno", "Scan for astheno-Kaehler obstructions");
  add_model(astheno);
  astheno->add_option("--pool", pool, "Extra (1,0)-forms, scanned before the default pool");

  std::string family, lambda, t, ks;
  int fam_n = 2, fam_m = 1;
  bool flags = false;
  auto* fam = app.add_subcommand("family", "Emit a model of one of the built-in families");
  fam->add_option("family", family, "bigalke-rollenske, nakamura, semidirect or torus")->required();
  fam->add_option("--n", fam_n, "Size parameter");
  fam->add_option("--m", fam_m, "Second size parameter (semidirect)");
  fam->add_option("--lambda", lambda, "Comma-separated rationals (nakamura) or one rational (semidirect)");
  fam->add_option("--t", t, "Lattice parameter (nakamura)");
  fam->add_option("--ks", ks, "Comma-separated lattice integers (semidirect)");
  fam->add_flag("--flags", flags, "Print condition flags instead of the model");
  fam->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  auto* ddbar = app.add_subcommand("ddbar-check", "Model-level ddbar-lemma check");
  add_model(ddbar);
  auto* formality = app.add_subcommand("formality", "Geometric Bott-Chern formality check");
  add_model(formality);
  auto* canonical = app.add_subcommand("canonical", "Invariant canonical section report");
  add_model(canonical);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    set_parallelism(common.jobs);
    if (validate->parsed()) return cmd_validate(common, in, out);
    if (coh->parsed()) return cmd_cohomology(common, theory, bidegree, reps, in, out);
    if (harm->parsed()) return cmd_harmonics(common, kind, bidegree, in, out);
    if (massey->parsed()) return cmd_massey(common, e12, e23, e34, pairing, in, out);
    if (certify->parsed()) return cmd_certify(common, cert_file, in, out);
    if (astheno->parsed()) return cmd_astheno(common, pool, in, out);
    if (fam->parsed()) return cmd_family(common, family, fam_n, fam_m, lambda, t, ks, flags, out);
    if (ddbar->parsed()) return cmd_ddbar(common, in, out);
    if (formality->parsed()) return cmd_formality(common, in, out);
    if (canonical->parsed()) return cmd_canonical(common, in, out);
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ValidationErrorKind::ParseError ? kParseError : kValidationError;
  } catch (const ExpressionError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const MasseyInputError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace solvcoh::cli

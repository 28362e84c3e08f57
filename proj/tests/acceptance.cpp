#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "cli.hpp"
#include "properties.hpp"
#include "solvcoh/massey.hpp"
#include "solvcoh/obstructions.hpp"

namespace solvcoh {
namespace {

using testing::expr;

constexpr double kBigalkeRollenske3Seconds = 60.0;
constexpr double kSemidirectSeconds = 30.0;
constexpr int kPropertyChecks = 10000;
constexpr std::uint32_t kPropertySeed = 0x5eed2024u;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Functionals collected while checking the other criteria, re-verified in
/// the soundness criterion.
struct Emitted {
  const ManifoldModel* model;
  Element target;
  SpanSpec space;
  Element functional;
};
std::vector<Emitted> g_emitted;
std::vector<std::string> g_certificates;

SpanSpec exact_span(Bidegree b, std::vector<Element> fixed, std::vector<Character> chars) {
  SpanSpec s;
  if (b.p > 0) s.ops.push_back({OpKind::del, {b.p - 1, b.q}});
  if (b.q > 0) s.ops.push_back({OpKind::delbar, {b.p, b.q - 1}});
  s.fixed = std::move(fixed);
  s.characters = std::move(chars);
  return s;
}

/// Equal to +-expected, or congruent to it modulo indeterminacy + im del + im delbar.
std::string compare_representative(const ManifoldModel& m, const MasseyResult& r, const Element& expected) {
  if (r.representative == expected) return "equal";
  if (r.representative == -expected) return "equal up to sign";
  const SpanSpec s = exact_span(r.representative_bidegree, r.indeterminacy, r.characters);
  if (solve_membership(m, r.representative - expected, s).member) return "congruent";
  if (solve_membership(m, r.representative + expected, s).member) return "congruent up to sign";
  return "";
}

void record_massey(const ManifoldModel& m, const MasseyResult& r) {
  if (r.certificate) {
    g_emitted.push_back({&m, r.representative, exact_span(r.representative_bidegree, r.indeterminacy, r.characters),
                         r.certificate->functional});
  }
  g_certificates.push_back(massey_to_json(m, r).dump());
}

Outcome bigalke_rollenske_massey(const ManifoldModel& m2, const ManifoldModel& m3) {
  Outcome o;
  for (const ManifoldModel* m : {&m2, &m3}) {
    const int n = m->n() / 4 + 1;
    const MetricContext ctx(*m);
    const auto t0 = std::chrono::steady_clock::now();
    const auto cls = [&](int j) { return wedge(m->coframe_form(j), m->coframe_form(j, true)); };
    const MasseyResult r = triple_abc_massey(ctx, cls(n), cls(2 * n), cls(2 * n), {Character()});
    const double secs = seconds_since(t0);
    const Element expected = -wedge({m->coframe_form(3 * n - 1), m->coframe_form(3 * n - 1, true),
                                     m->coframe_form(2 * n), m->coframe_form(2 * n, true)});
    const std::string match = compare_representative(*m, r, expected);
    o.require(r.verdict == Verdict::non_vanishing, fmt::format("n={} verdict {}", n, to_string(r.verdict)));
    o.require(!match.empty(), fmt::format("n={} representative {}", n, m->format(r.representative)));
    o.require(verify_massey_certificate(*m, r).ok, fmt::format("n={} certificate rejected", n));
    if (n == 3) o.require(secs < kBigalkeRollenske3Seconds, fmt::format("n=3 took {:.1f} s", secs));
    record_massey(*m, r);
    if (o.pass) o.detail += fmt::format("{}n={}: {} ({:.2f} s)", o.detail.empty() ? "" : ", ", n, match, secs);
  }
  return o;
}

Outcome astheno_certificates() {
  Outcome o;
  int found = 0;
  auto check = [&](const ManifoldModel& m, const std::vector<Element>& pool, const Element& beta, const Element& eta,
                   const std::string& label) {
    const auto certs = astheno_obstruction_scan(m, pool);
    bool hit = false;
    for (const auto& c : certs) {
      if (!verify_astheno_certificate(m, c).ok) o.require(false, label + ": emitted certificate fails");
      g_certificates.push_back(astheno_to_json(m, c).dump());
      if (c.beta == beta && c.eta == eta && c.scale == 1) hit = true;
    }
    o.require(hit, label + ": expected certificate missing");
    found += hit;
  };
  for (int n : {2, 3}) {
    const auto m = testing::br_model(n);
    check(m, default_pool(m), wedge(m.coframe_form(n), m.coframe_form(2 * n)),
          -wedge(m.coframe_form(3 * n - 1), m.coframe_form(3 * n - 1, true)), fmt::format("bigalke-rollenske {}", n));
  }
  for (long l : {1L, 2L}) {
    const auto m = testing::nakamura_model({l, -l});
    for (int i : {1, 2}) {
      check(m, default_pool(m), wedge(m.coframe_form(1), m.coframe_form(i + 1)),
            Scalar(make_rational(-1, l * l)) * wedge(m.coframe_form(i + 1), m.coframe_form(i + 1, true)),
            fmt::format("nakamura lambda={} i={}", l, i));
    }
  }
  for (long l : {1L, 2L}) {
    const auto m = testing::semidirect_model(1, 1, Rational(l));
    const Element sigma = semidirect_sigma(m, 1);
    check(m, default_pool(m, {sigma}), wedge(sigma, m.coframe_form(3)),
          Scalar(make_rational(-1, l * l)) * wedge(m.coframe_form(3), m.coframe_form(3, true)),
          fmt::format("semidirect lambda={}", l));
  }
  if (o.pass) o.detail = fmt::format("{} certificates found exactly and verified", found);
  return o;
}

Outcome canonical_sections(const ManifoldModel& m2, const ManifoldModel& m3) {
  Outcome o;
  for (const ManifoldModel* m : {&m2, &m3}) {
    const CanonicalReport r = canonical_section_check(*m);
    o.require(r.dbar_top.is_zero() && r.holomorphic, m->name() + ": dbar of the top form is nonzero");
    o.require(r.kodaira_dimension == 0, m->name() + ": Kodaira dimension not 0");
  }
  if (o.pass) o.detail = "dbar(top (n,0) form) = 0, kappa = 0 for n = 2, 3";
  return o;
}

/// Generator table for the Nakamura model with t = 1: coframe phi0..phi2 at
/// indices 1..3, f_LM = f^{c_LM}.
std::vector<Element> nakamura_pattern(const ManifoldModel& m, const NakamuraParams& np, int p, int q, bool aeppli) {
  std::vector<Element> out;
  const int k = static_cast<int>(np.lambdas.size());
  auto mono = [&](bool zero, bool zerobar, Mask l, Mask mm) {
    return FormMonomial{(l << 1) | (zero ? 1u : 0u), (mm << 1) | (zerobar ? 1u : 0u)};
  };
  // rows: (holo 0?, anti 0?, |L| offset, |M| offset, gate on f, gate on conj f)
  struct Row {
    bool zero, zerobar, gate_f, gate_fbar;
  };
  const Row bc_rows[4] = {{false, false, true, true}, {true, false, false, true}, {false, true, true, false},
                          {true, true, false, false}};
  const Row a_rows[4] = {{false, false, false, false}, {true, false, true, false}, {false, true, false, true},
                         {true, true, true, true}};
  for (const Row& row : aeppli ? a_rows : bc_rows) {
    const int lp = p - row.zero, lq = q - row.zerobar;
    if (lp < 0 || lq < 0) continue;
    for (Mask l : subsets_lex(k, lp)) {
      for (Mask mm : subsets_lex(k, lq)) {
        std::vector<int> L, M;
        for (int i = 0; i < k; ++i) {
          if (l >> i & 1) L.push_back(i + 1);
          if (mm >> i & 1) M.push_back(i + 1);
        }
        const Rational c = nakamura_weight(np, L, M) * np.t;
        if (c.get_den() != 1) continue;
        const int e = static_cast<int>(c.get_num().get_si());
        const FormMonomial x = mono(row.zero, row.zerobar, l, mm);
        if (!row.gate_f || e == 0) out.push_back(Element::monomial(m.n(), x, 1, e ? Character({e}) : Character()));
        if (!row.gate_fbar || e == 0) out.push_back(Element::monomial(m.n(), x, 1, e ? Character({-e}) : Character()));
      }
    }
  }
  return out;
}

Outcome nakamura_bott_chern_tables() {
  Outcome o;
  const NakamuraParams np{{Rational(1), Rational(-1)}, Rational(1)};
  const auto m = ManifoldModel::create(nakamura(np).data);
  const MetricContext ctx(m);
  const auto s = m.default_character_set();
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const auto bc = harmonic_basis(ctx, HarmonicKind::bott_chern, p, q, s);
    const auto a = harmonic_basis(ctx, HarmonicKind::aeppli, p, q, s);
    const auto bc_expected = nakamura_pattern(m, np, p, q, false);
    const auto a_expected = nakamura_pattern(m, np, p, q, true);
    o.require(testing::same_span(bc, bc_expected),
              fmt::format("BC ({},{}): computed {} vs table rank {}", p, q, bc.size(), testing::span_rank(bc_expected)));
    o.require(testing::same_span(a, a_expected),
              fmt::format("A ({},{}): computed {} vs table rank {}", p, q, a.size(), testing::span_rank(a_expected)));
    std::vector<Element> stars;
    for (const auto& h : bc) stars.push_back(hodge_star(ctx, h));
    o.require(testing::same_span(stars, harmonic_basis(ctx, HarmonicKind::aeppli, 3 - p, 3 - q, s)),
              fmt::format("*BC ({},{}) differs from A ({},{})", p, q, 3 - p, 3 - q));
    if (o.pass) o.detail += fmt::format("{}({},{}): BC {} A {}", o.detail.empty() ? "" : ", ", p, q, bc.size(), a.size());
  }
  if (o.pass) o.detail += "; Aeppli = star of Bott-Chern";
  return o;
}

Outcome nakamura_ddbar_and_formality() {
  Outcome o;
  const auto m = testing::nakamura_model({1, -1}, Rational(1, 3));
  const DdbarReport dd = ddbar_lemma_check(m, m.default_character_set());
  const FormalityReport f = bc_formality_check(MetricContext(m), m.default_character_set());
  o.require(dd.holds, "ddbar-lemma fails");
  o.require(f.pass, "Bott-Chern harmonic forms not closed under wedge");
  if (o.pass) o.detail = fmt::format("ddbar-lemma holds, {} harmonic pairs closed", f.pairs_checked);
  return o;
}

Outcome nakamura_massey(const ManifoldModel& m) {
  Outcome o;
  const MetricContext ctx(m);
  const MasseyResult r = triple_abc_massey(ctx, expr(m, "f*phi0^phi1"), expr(m, "conj(f*phi0^phi1)"),
                                           expr(m, "f*phibar0^phibar2"), m.default_character_set());
  o.require(r.verdict == Verdict::non_vanishing, "verdict " + to_string(r.verdict));
  o.require(verify_massey_certificate(m, r).ok, "certificate rejected");
  record_massey(m, r);
  if (r.verdict != Verdict::non_vanishing) return o;
  const PairingCertificate pc = pairing_certificate(ctx, r);
  o.require(pc.applies, "pairing certificate: " + pc.failure);
  o.require(pc.orthogonality_characters == std::set<Character>{Character({-2}), Character({2})},
            "orthogonality characters differ from {f^2, f^-2}");
  int orth = 0, pointwise = 0;
  for (const auto& p : pc.pairings) {
    orth += p.kind == PairingKind::character_orthogonal;
    pointwise += p.kind == PairingKind::pointwise_zero;
    o.require(p.kind != PairingKind::nonzero, "an indeterminacy pairing is nonzero");
  }
  if (o.pass) {
    o.detail = fmt::format("non_vanishing; {} pairings vanish by integrating f^2 or f^-2, {} pointwise", orth, pointwise);
  }
  return o;
}

Outcome semidirect_massey(const ManifoldModel& m) {
  Outcome o;
  const MetricContext ctx(m);
  const auto t0 = std::chrono::steady_clock::now();
  const MasseyResult r = triple_abc_massey(ctx, expr(m, "beta2*(phi1+phi2)^psi2"),
                                           expr(m, "-conj(beta1*(phi1+phi2)^psi1)"),
                                           expr(m, "conj(beta2*(phi1+phi2)^psi2)"), m.default_character_set());
  const double secs = seconds_since(t0);
  const Element expected = wedge({expr(m, "beta1{-1}*conj(phi1+phi2)"), expr(m, "psi2^psibar1^psibar2")});
  const std::string match = compare_representative(m, r, expected);
  o.require(r.verdict == Verdict::non_vanishing, "verdict " + to_string(r.verdict));
  o.require(!match.empty(), "representative " + m.format(r.representative));
  o.require(verify_massey_certificate(m, r).ok, "certificate rejected");
  o.require(secs < kSemidirectSeconds, fmt::format("took {:.1f} s", secs));
  record_massey(m, r);
  if (o.pass) o.detail = fmt::format("non_vanishing, representative {} ({:.2f} s)", match, secs);
  return o;
}

Outcome laplacian_kernels(const ManifoldModel& m) {
  Outcome o;
  const MetricContext ctx(m);
  int blocks = 0;
  for (HarmonicKind k : {HarmonicKind::bott_chern, HarmonicKind::aeppli}) {
    for (int p = 0; p <= m.n(); ++p) {
      for (int q = 0; q <= m.n(); ++q) {
        const SparseMatrix lap = laplacian_block(ctx, k, Character(), p, q);
        const int kernel = lap.cols - rank(lap);
        const auto basis = harmonic_basis(ctx, k, p, q, {Character()});
        const MonomialBasis mb(m.n(), p, q);
        bool inside = true;
        for (const auto& h : basis) inside &= lap.apply(to_coordinates(h, Character(), mb)).empty();
        o.require(kernel == static_cast<int>(basis.size()) && inside,
                  fmt::format("{} ({},{}): kernel {} vs basis {}", to_string(k), p, q, kernel, basis.size()));
        ++blocks;
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} blocks, exact rank equality", blocks);
  return o;
}

Outcome algebra_invariants() {
  Outcome o;
  const int rounds = (kPropertyChecks + testing::kPropertyCount - 1) / testing::kPropertyCount;
  const auto tally = testing::run_property_checks(kPropertySeed, rounds);
  o.require(tally.total_checks() >= kPropertyChecks, "too few checks");
  o.require(tally.total_failures() == 0, fmt::format("{} failures", tally.total_failures()));
  for (const auto& msg : tally.messages) o.require(false, msg);
  if (o.pass) o.detail = fmt::format("{} randomized checks, 0 failures (seed {:#x})", tally.total_checks(), kPropertySeed);
  return o;
}

std::string cli_output(const std::vector<std::string>& args, const std::string& input, int* code) {
  std::istringstream in(input);
  std::ostringstream out, err;
  *code = cli::run(args, in, out, err);
  return out.str();
}

Outcome certificate_soundness(const std::vector<const ManifoldModel*>& models) {
  Outcome o;
  int functionals = 0;
  for (const auto& e : g_emitted) {
    o.require(verify_functional(*e.model, e.target, e.space, e.functional), "an emitted functional fails");
    ++functionals;
  }
  testing::Gen g(4242);
  for (const ManifoldModel* m : models) {
    for (int i = 0; i < 25; ++i) {
      const int p = g.uniform(1, std::min(3, m->n())), q = g.uniform(1, std::min(3, m->n()));
      const Element target = g.form(*m, p, q, 3);
      const SpanSpec s = exact_span({p, q}, {g.form(*m, p, q, 2)}, m->default_character_set());
      const MembershipResult r = solve_membership(*m, target, s);
      if (!r.member) {
        o.require(verify_functional(*m, target, s, r.functional), "random non-member functional fails");
        ++functionals;
      }
    }
  }
  int certified = 0;
  for (const auto& cert : g_certificates) {
    int code = 0;
    cli_output({"certify"}, cert, &code);
    o.require(code == cli::kOk, "certify rejected an emitted certificate");
    ++certified;
  }
  const std::vector<std::vector<std::string>> runs = {
      {"massey", "--a12", "phi2^phibar2", "--a23", "phi4^phibar4", "--a34", "phi4^phibar4", "--format", "json"},
      {"astheno", "--format", "json"},
      {"cohomology", "--representatives"},
  };
  const std::string model = dump_model(models.front()->data());
  for (const auto& args : runs) {
    int c1 = 0, c2 = 0;
    const std::string first = cli_output(args, model, &c1);
    const std::string second = cli_output(args, model, &c2);
    o.require(c1 == cli::kOk && first == second && !first.empty(), args.front() + " output not reproducible");
  }
  if (o.pass) {
    o.detail = fmt::format("{} functionals re-verified, {} certificates accepted by certify, byte-identical reruns",
                           functionals, certified);
  }
  return o;
}

}  // namespace
}  // namespace solvcoh

int main() {
  using namespace solvcoh;
  const auto br2 = testing::br_model(2);
  const auto br3 = testing::br_model(3);
  const auto nak = testing::nakamura_model({1, -1});
  const auto semi = testing::semidirect_model(1, 1);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Bigalke-Rollenske triple Massey product non-vanishing (n = 2, 3)", [&] { return bigalke_rollenske_massey(br2, br3); }},
      {"astheno-Kaehler obstruction certificates", [] { return astheno_certificates(); }},
      {"holomorphic invariant canonical section, kappa = 0", [&] { return canonical_sections(br2, br3); }},
      {"Nakamura Bott-Chern and Aeppli harmonic generator tables", [] { return nakamura_bott_chern_tables(); }},
      {"Nakamura t = 1/3: ddbar-lemma and Bott-Chern formality", [] { return nakamura_ddbar_and_formality(); }},
      {"Nakamura triple Massey product via character orthogonality", [&] { return nakamura_massey(nak); }},
      {"semidirect family triple Massey product", [&] { return semidirect_massey(semi); }},
      {"fourth-order Laplacian kernels equal harmonic bases", [&] { return laplacian_kernels(br2); }},
      {"randomized algebra invariants", [] { return algebra_invariants(); }},
      {"certificate soundness and reproducible output", [&] { return certificate_soundness({&br2, &nak, &semi}); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << fmt::format("[{}] AC{:<2} {}: {}\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
  }
  std::cout << fmt::format("{}/{} acceptance criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

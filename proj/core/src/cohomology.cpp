#include "solvcoh/cohomology.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "solvcoh/parallel.hpp"

namespace solvcoh {

std::string to_string(Theory t) {
  switch (t) {
    case Theory::dolbeault: return "dolbeault";
    case Theory::bott_chern: return "bott_chern";
    case Theory::aeppli: return "aeppli";
    case Theory::de_rham: return "de_rham";
  }
  return "?";
}

std::optional<Theory> parse_theory(std::string_view s) {
  if (s == "dolbeault") return Theory::dolbeault;
  if (s == "bott_chern" || s == "bc" || s == "bott-chern") return Theory::bott_chern;
  if (s == "aeppli") return Theory::aeppli;
  if (s == "de_rham" || s == "derham" || s == "de-rham") return Theory::de_rham;
  return std::nullopt;
}

int CohomologyBasis::dimension() const {
  int d = 0;
  for (const auto& b : blocks) d += b.dimension();
  return d;
}

std::vector<Element> CohomologyBasis::representatives() const {
  std::vector<Element> out;
  for (const auto& b : blocks) out.insert(out.end(), b.representatives.begin(), b.representatives.end());
  return out;
}

namespace {

bool in_range(int n, int p, int q) { return p >= 0 && q >= 0 && p <= n && q <= n; }

SparseMatrix block_or_empty(const ManifoldModel& m, OpKind kind, const Character& chi, int p, int q,
                            int target_rows) {
  if (!in_range(m.n(), p, q)) return SparseMatrix(target_rows, 0);
  return operator_block(m, kind, chi, p, q).matrix;
}

struct BlockData {
  std::vector<SparseVector> cocycles;
  std::vector<SparseMatrix> coboundaries;
};

BlockData block_data(const ManifoldModel& m, Theory theory, const Character& chi, int p, int q) {
  const int rows = static_cast<int>(binomial(m.n(), p) * binomial(m.n(), q));
  BlockData out;
  switch (theory) {
    case Theory::dolbeault: {
      const SparseMatrix a = operator_block(m, OpKind::delbar, chi, p, q).matrix;
      out.cocycles = kernel_basis(a);
      out.coboundaries.push_back(block_or_empty(m, OpKind::delbar, chi, p, q - 1, rows));
      break;
    }
    case Theory::bott_chern: {
      const SparseMatrix a = operator_block(m, OpKind::del, chi, p, q).matrix;
      const SparseMatrix b = operator_block(m, OpKind::delbar, chi, p, q).matrix;
      out.cocycles = joint_kernel({&a, &b});
      out.coboundaries.push_back(block_or_empty(m, OpKind::ddbar, chi, p - 1, q - 1, rows));
      break;
    }
    case Theory::aeppli: {
      const SparseMatrix a = operator_block(m, OpKind::ddbar, chi, p, q).matrix;
      out.cocycles = kernel_basis(a);
      out.coboundaries.push_back(block_or_empty(m, OpKind::del, chi, p - 1, q, rows));
      out.coboundaries.push_back(block_or_empty(m, OpKind::delbar, chi, p, q - 1, rows));
      break;
    }
    case Theory::de_rham: throw std::logic_error("de Rham blocks are handled by degree");
  }
  return out;
}

CohomologyBlock quotient(const std::vector<SparseVector>& cocycles,
                         const std::vector<SparseMatrix>& coboundaries, const Character& chi,
                         const std::function<Element(const SparseVector&)>& to_element) {
  CohomologyBlock block;
  block.chi = chi;
  block.cocycle_dim = static_cast<int>(cocycles.size());
  Echelon e;
  for (const auto& mat : coboundaries) {
    for (const auto& col : mat.columns) e.insert(col);
  }
  block.coboundary_rank = e.rank();
  for (const auto& v : cocycles) {
    if (e.insert(v)) block.representatives.push_back(to_element(v));
  }
  return block;
}

/// All monomials of total degree k, concatenated over bidegrees.
struct DegreeSpace {
  std::vector<MonomialBasis> parts;
  std::vector<int> offsets;
  int size = 0;

  DegreeSpace(int n, int k) {
    for (int p = std::max(0, k - n); p <= std::min(k, n); ++p) {
      parts.emplace_back(n, p, k - p);
      offsets.push_back(size);
      size += parts.back().size();
    }
  }
  int index_of(const FormMonomial& mono) const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].p() == mono.p()) {
        const int idx = parts[i].index_of(mono);
        return idx < 0 ? -1 : offsets[i] + idx;
      }
    }
    return -1;
  }
  FormMonomial at(int idx) const {
    for (std::size_t i = parts.size(); i-- > 0;) {
      if (idx >= offsets[i]) return parts[i][idx - offsets[i]];
    }
    throw std::out_of_range("degree space index");
  }
};

SparseMatrix d_matrix(const ManifoldModel& m, const Character& chi, const DegreeSpace& src,
                      const DegreeSpace& tgt) {
  SparseMatrix out(tgt.size, src.size);
  for (int j = 0; j < src.size; ++j) {
    const Element img = m.d(Element::monomial(m.n(), src.at(j), 1, chi));
    std::vector<SparseVector::Entry> entries;
    for (const auto& [key, c] : img.terms()) entries.emplace_back(tgt.index_of(key.mono), c);
    out.columns[j] = SparseVector::from_entries(std::move(entries));
  }
  return out;
}

}  // namespace

CohomologyBasis cohomology(const ManifoldModel& m, Theory theory, const std::vector<Character>& s,
                           int p, int q) {
  if (theory == Theory::de_rham) {
    CohomologyBasis b = de_rham_cohomology(m, s, p + q);
    b.p = p;
    b.q = q;
    return b;
  }
  if (!in_range(m.n(), p, q)) throw std::invalid_argument("bidegree out of range");
  CohomologyBasis out{theory, p, q, close_under_inverse(s), {}};
  out.blocks.resize(out.characters.size());
  const MonomialBasis basis(m.n(), p, q);
  parallel_for(static_cast<int>(out.characters.size()), [&](int i) {
    const Character& chi = out.characters[i];
    const BlockData data = block_data(m, theory, chi, p, q);
    out.blocks[i] = quotient(data.cocycles, data.coboundaries, chi,
                             [&](const SparseVector& v) { return from_coordinates(v, chi, basis); });
  });
  return out;
}

CohomologyBasis de_rham_cohomology(const ManifoldModel& m, const std::vector<Character>& s, int k) {
  if (k < 0 || k > 2 * m.n()) throw std::invalid_argument("degree out of range");
  CohomologyBasis out{Theory::de_rham, k, 0, close_under_inverse(s), {}};
  out.blocks.resize(out.characters.size());
  const DegreeSpace here(m.n(), k);
  parallel_for(static_cast<int>(out.characters.size()), [&](int i) {
    const Character& chi = out.characters[i];
    std::vector<SparseVector> cocycles;
    if (k < 2 * m.n()) {
      const SparseMatrix dk = d_matrix(m, chi, here, DegreeSpace(m.n(), k + 1));
      cocycles = kernel_basis(dk);
    } else {
      for (int j = 0; j < here.size; ++j) cocycles.push_back(SparseVector::unit(j));
    }
    std::vector<SparseMatrix> images;
    if (k > 0) images.push_back(d_matrix(m, chi, DegreeSpace(m.n(), k - 1), here));
    out.blocks[i] = quotient(cocycles, images, chi, [&](const SparseVector& v) {
      Element e(m.n());
      for (const auto& [idx, c] : v.entries()) e.add_term(chi, here.at(idx), c);
      return e;
    });
  });
  return out;
}

// ---------------------------------------------------------------------------

Scalar evaluate_functional(const Element& y, const Element& x) {
  Scalar s;
  const Element& small = y.size() <= x.size() ? y : x;
  const Element& large = y.size() <= x.size() ? x : y;
  for (const auto& [key, c] : small.terms()) {
    auto it = large.terms().find(key);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

namespace {

struct Generator {
  int op = -1;  // -1 for fixed elements
  Character chi;
  FormMonomial mono;
  Element image;
};

}  // namespace

MembershipResult solve_membership(const ManifoldModel& m, const Element& target, const SpanSpec& space) {
  MembershipResult res;
  res.witness.target = target;
  res.witness.fixed_coefficients.assign(space.fixed.size(), Scalar{});
  for (const auto& op : space.ops) res.witness.preimages.push_back({op.kind, m.zero()});
  if (target.is_zero()) {
    res.member = true;
    return res;
  }
  const auto bd = target.bidegree();
  if (!bd) throw std::invalid_argument("membership target is not bidegree-homogeneous");
  const Bidegree tb{bd->first, bd->second};
  std::set<Character> chars = target.characters();
  chars.insert(space.characters.begin(), space.characters.end());
  for (const auto& f : space.fixed) {
    if (f.is_zero()) continue;
    const auto fb = f.bidegree();
    if (!fb || *fb != *bd) throw std::invalid_argument("spanning element has a different bidegree");
    for (const auto& c : f.characters()) chars.insert(c);
  }
  for (const auto& op : space.ops) {
    if (op.kind == OpKind::d) throw std::invalid_argument("membership spaces use del, delbar, ddbar");
    if (!in_range(m.n(), op.domain.p, op.domain.q)) continue;
    const auto tgts = target_bidegrees(op.kind, m.n(), op.domain.p, op.domain.q);
    if (tgts.size() != 1 || tgts.front() != tb) {
      throw std::invalid_argument("operator image has a different bidegree than the target");
    }
  }

  std::vector<Generator> gens;
  for (const auto& f : space.fixed) gens.push_back({-1, {}, {}, f});
  for (std::size_t o = 0; o < space.ops.size(); ++o) {
    const auto& op = space.ops[o];
    if (!in_range(m.n(), op.domain.p, op.domain.q)) continue;
    const MonomialBasis dom(m.n(), op.domain.p, op.domain.q);
    for (const auto& chi : chars) {
      for (const auto& mono : dom.monomials()) {
        gens.push_back({static_cast<int>(o), chi, mono,
                        m.apply(op.kind, Element::monomial(m.n(), mono, 1, chi))});
      }
    }
  }

  std::set<TermKey, TermKeyLess> keyset;
  for (const auto& [k, c] : target.terms()) keyset.insert(k);
  for (const auto& g : gens) {
    for (const auto& [k, c] : g.image.terms()) keyset.insert(k);
  }
  const std::vector<TermKey> keys(keyset.begin(), keyset.end());
  std::map<TermKey, int, TermKeyLess> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], static_cast<int>(i));
  auto coords = [&](const Element& e) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [k, c] : e.terms()) entries.emplace_back(index.at(k), c);
    return SparseVector::from_entries(std::move(entries));
  };

  Echelon ech;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    ech.insert(coords(gens[g].image), SparseVector::unit(static_cast<int>(g)));
  }
  SparseVector combo;
  const SparseVector rem = ech.reduce(coords(target), &combo);
  if (rem.empty()) {
    res.member = true;
    for (const auto& [g, c] : combo.entries()) {
      const Generator& gen = gens[g];
      if (gen.op < 0) {
        res.witness.fixed_coefficients[g] = -c;
      } else {
        res.witness.preimages[gen.op].preimage.add_term(gen.chi, gen.mono, -c);
      }
    }
    return res;
  }
  const SparseVector y = ech.annihilator(rem);
  res.functional = Element(m.n());
  for (const auto& [i, c] : y.entries()) res.functional.add_term(keys[i].chi, keys[i].mono, c);
  res.target_value = evaluate_functional(res.functional, target);
  return res;
}

bool verify_witness(const ManifoldModel& m, const SpanSpec& space, const MembershipWitness& w) {
  if (w.fixed_coefficients.size() != space.fixed.size() || w.preimages.size() != space.ops.size()) {
    return false;
  }
  Element sum(m.n());
  for (std::size_t j = 0; j < space.fixed.size(); ++j) sum += space.fixed[j] * w.fixed_coefficients[j];
  for (std::size_t i = 0; i < space.ops.size(); ++i) {
    const auto& pre = w.preimages[i];
    if (pre.kind != space.ops[i].kind) return false;
    if (pre.preimage.is_zero()) continue;
    const auto bd = pre.preimage.bidegree();
    if (!bd || bd->first != space.ops[i].domain.p || bd->second != space.ops[i].domain.q) return false;
    sum += m.apply(pre.kind, pre.preimage);
  }
  return sum == w.target;
}

bool verify_functional(const ManifoldModel& m, const Element& target, const SpanSpec& space,
                       const Element& y) {
  if (evaluate_functional(y, target).is_zero()) return false;
  for (const auto& f : space.fixed) {
    if (!evaluate_functional(y, f).is_zero()) return false;
  }
  const std::set<Character> chars = y.characters();
  for (const auto& op : space.ops) {
    if (!in_range(m.n(), op.domain.p, op.domain.q)) continue;
    const MonomialBasis dom(m.n(), op.domain.p, op.domain.q);
    for (const auto& chi : chars) {
      for (const auto& mono : dom.monomials()) {
        const Element img = m.apply(op.kind, Element::monomial(m.n(), mono, 1, chi));
        if (!evaluate_functional(y, img).is_zero()) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

int rank_modulo(const std::vector<SparseVector>& vectors, const std::vector<SparseMatrix>& mod) {
  Echelon e;
  for (const auto& mat : mod) {
    for (const auto& col : mat.columns) e.insert(col);
  }
  int r = 0;
  for (const auto& v : vectors) r += e.insert(v) ? 1 : 0;
  return r;
}

std::vector<SparseVector> block_representatives(const BlockData& d) {
  Echelon e;
  for (const auto& mat : d.coboundaries) {
    for (const auto& col : mat.columns) e.insert(col);
  }
  std::vector<SparseVector> out;
  for (const auto& v : d.cocycles) {
    if (e.insert(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

DdbarReport ddbar_lemma_check(const ManifoldModel& m, const std::vector<Character>& s) {
  DdbarReport report;
  report.characters = close_under_inverse(s);
  const int n = m.n();
  std::vector<std::pair<int, int>> bidegrees;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) bidegrees.emplace_back(p, q);
  }
  report.rows.resize(bidegrees.size());
  parallel_for(static_cast<int>(bidegrees.size()), [&](int idx) {
    const auto [p, q] = bidegrees[idx];
    DdbarRow row{p, q};
    for (const auto& chi : report.characters) {
      const BlockData bc = block_data(m, Theory::bott_chern, chi, p, q);
      const BlockData dol = block_data(m, Theory::dolbeault, chi, p, q);
      const BlockData aep = block_data(m, Theory::aeppli, chi, p, q);
      const auto bc_reps = block_representatives(bc);
      const auto dol_reps = block_representatives(dol);
      const auto aep_reps = block_representatives(aep);
      row.bott_chern += static_cast<int>(bc_reps.size());
      row.dolbeault += static_cast<int>(dol_reps.size());
      row.aeppli += static_cast<int>(aep_reps.size());
      row.rank_bc_to_dolbeault += rank_modulo(bc_reps, dol.coboundaries);
      row.rank_dolbeault_to_aeppli += rank_modulo(dol_reps, aep.coboundaries);
    }
    report.rows[idx] = row;
  });
  report.holds = std::all_of(report.rows.begin(), report.rows.end(),
                             [](const DdbarRow& r) { return r.isomorphic(); });
  return report;
}

std::string format_cohomology_table(const ManifoldModel& m, const std::vector<CohomologyBasis>& bases) {
  const auto labels = m.character_labels();
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"theory", "bidegree", "character", "dim"});
  for (const auto& b : bases) {
    const std::string deg = b.theory == Theory::de_rham ? fmt::format("{}", b.p + b.q)
                                                        : fmt::format("({},{})", b.p, b.q);
    for (const auto& blk : b.blocks) {
      if (blk.dimension() == 0) continue;
      const std::string chi = blk.chi.is_trivial() ? "1" : character_str(blk.chi, labels);
      rows.push_back({to_string(b.theory), deg, chi, std::to_string(blk.dimension())});
    }
    rows.push_back({to_string(b.theory), deg, "total", std::to_string(b.dimension())});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (int i = 0; i < 4; ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}  {:<{}}  {:<{}}  {:>{}}\n", r[0], width[0], r[1], width[1], r[2],
                       width[2], r[3], width[3]);
  }
  return out;
}

}  // namespace solvcoh

#include "solvcoh/model.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace solvcoh {

std::string to_string(ValidationErrorKind k) {
  switch (k) {
    case ValidationErrorKind::ParseError: return "ParseError";
    case ValidationErrorKind::InvalidData: return "InvalidData";
    case ValidationErrorKind::NotIntegrable: return "NotIntegrable";
    case ValidationErrorKind::NotClosedSquare: return "NotClosedSquare";
    case ValidationErrorKind::DlogNotClosed: return "DlogNotClosed";
    case ValidationErrorKind::NotUnitary: return "NotUnitary";
    case ValidationErrorKind::NotUnimodular: return "NotUnimodular";
  }
  return "?";
}

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::d: return "d";
    case OpKind::del: return "del";
    case OpKind::delbar: return "delbar";
    case OpKind::ddbar: return "ddbar";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(ValidationErrorKind kind, const std::string& msg) { throw ModelError(kind, msg); }

bool all_trivial(const Element& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& t) { return t.first.chi.is_trivial(); });
}

bool all_degree(const Element& e, int k) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [k](const auto& t) { return t.first.mono.degree() == k; });
}

}  // namespace

ManifoldModel::ManifoldModel(ModelData data) : data_(std::move(data)) {
  structure_bar_.reserve(data_.structure.size());
  for (const auto& e : data_.structure) structure_bar_.push_back(conjugate(e));
}

ManifoldModel ManifoldModel::create(ModelData data) {
  const int n = data.n;
  if (n < 1 || n > kMaxCoframe) fail(ValidationErrorKind::InvalidData, "coframe size out of range");
  if (static_cast<int>(data.coframe.size()) != n) {
    fail(ValidationErrorKind::InvalidData, "coframe label count differs from n");
  }
  std::set<std::string> labels;
  for (const auto& l : data.coframe) {
    if (l.empty() || !labels.insert(l).second) {
      fail(ValidationErrorKind::InvalidData, "coframe labels must be nonempty and distinct");
    }
  }
  if (data.metric.empty()) data.metric.assign(n, Rational(1));
  if (static_cast<int>(data.metric.size()) != n) {
    fail(ValidationErrorKind::InvalidData, "metric needs one entry per coframe element");
  }
  for (const auto& g : data.metric) {
    if (sgn(g) <= 0) fail(ValidationErrorKind::InvalidData, "metric entries must be positive");
  }
  std::set<std::string> char_labels;
  for (const auto& c : data.characters) {
    if (c.label.empty() || !char_labels.insert(c.label).second || labels.count(c.label)) {
      fail(ValidationErrorKind::InvalidData, "character labels must be nonempty and distinct");
    }
    if (c.dlog.dim() != n || !all_trivial(c.dlog) || !all_degree(c.dlog, 1)) {
      fail(ValidationErrorKind::InvalidData,
           "dlog of character " + c.label + " must be a constant 1-form");
    }
  }
  if (static_cast<int>(data.structure.size()) != n) {
    fail(ValidationErrorKind::InvalidData, "need one structure equation per coframe element");
  }
  for (int j = 0; j < n; ++j) {
    const Element& e = data.structure[j];
    if (e.dim() != n || !all_trivial(e) || !all_degree(e, 2)) {
      fail(ValidationErrorKind::InvalidData,
           "structure equation for " + data.coframe[j] + " must be a constant 2-form");
    }
  }
  for (const auto& chi : data.character_set) {
    if (chi.exponents().size() > data.characters.size()) {
      fail(ValidationErrorKind::InvalidData, "character set refers to an undeclared character");
    }
  }
  data.character_set = close_under_inverse(std::move(data.character_set));
  ManifoldModel m(std::move(data));
  m.validate();
  return m;
}

void ManifoldModel::validate() const {
  const int n = data_.n;
  for (int j = 0; j < n; ++j) {
    if (!project_bidegree(data_.structure[j], 0, 2).is_zero()) {
      fail(ValidationErrorKind::NotIntegrable, "d" + data_.coframe[j] + " has a (0,2) component");
    }
  }
  for (const auto& c : data_.characters) {
    if (!(conjugate(c.dlog) == -c.dlog)) {
      fail(ValidationErrorKind::NotUnitary, "dlog of " + c.label + " is not imaginary");
    }
    if (!d(c.dlog).is_zero()) {
      fail(ValidationErrorKind::DlogNotClosed, "dlog of " + c.label + " is not closed");
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (!d(d(coframe_form(j))).is_zero()) {
      fail(ValidationErrorKind::NotClosedSquare, "d^2 " + data_.coframe[j - 1] + " != 0");
    }
  }
  const FormMonomial vol = volume_monomial();
  for (int j = 0; j < n; ++j) {
    for (int side = 0; side < 2; ++side) {
      FormMonomial m = vol;
      (side == 0 ? m.holo : m.anti) &= ~(Mask(1) << j);
      Scalar top;
      for (const auto& [mono, c] : d_monomial(m)) {
        if (mono == vol) top += c;
      }
      if (!top.is_zero()) {
        fail(ValidationErrorKind::NotUnimodular,
             "d(" + m.str(data_.coframe) + ") has a nonzero volume component");
      }
    }
  }
}

std::vector<std::string> ManifoldModel::character_labels() const {
  std::vector<std::string> out;
  for (const auto& c : data_.characters) out.push_back(c.label);
  return out;
}

Rational ManifoldModel::weight(const Character& chi) const {
  Rational w(0);
  for (std::size_t k = 0; k < chi.exponents().size(); ++k) {
    w += Rational(chi.exponent(k)) * data_.characters.at(k).weight;
  }
  return w;
}

Element ManifoldModel::dlog(const Character& chi) const {
  Element out(data_.n);
  for (std::size_t k = 0; k < chi.exponents().size(); ++k) {
    if (chi.exponent(k) != 0) out += data_.characters.at(k).dlog * Scalar(chi.exponent(k));
  }
  return out;
}

Element ManifoldModel::coframe_form(int j, bool bar, const Scalar& c) const {
  FormMonomial m;
  (bar ? m.anti : m.holo) = Mask(1) << (j - 1);
  return Element::monomial(data_.n, m, c);
}

FormMonomial ManifoldModel::volume_monomial() const {
  const Mask full = data_.n == 32 ? ~Mask(0) : ((Mask(1) << data_.n) - 1);
  return FormMonomial{full, full};
}

std::vector<std::pair<FormMonomial, Scalar>> ManifoldModel::d_monomial(const FormMonomial& m) const {
  std::vector<std::pair<FormMonomial, Scalar>> out;
  FormMonomial prefix;
  FormMonomial suffix = m;
  int pos = 0;
  auto visit = [&](int bit, bool bar) {
    Mask b = Mask(1) << bit;
    (bar ? suffix.anti : suffix.holo) &= ~b;
    const Element& df = bar ? structure_bar_[bit] : data_.structure[bit];
    const int base_sign = (pos % 2 == 0) ? 1 : -1;
    for (const auto& [key, c] : df.terms()) {
      SignedMonomial a = wedge(prefix, key.mono);
      if (a.sign == 0) continue;
      SignedMonomial b2 = wedge(a.mono, suffix);
      if (b2.sign == 0) continue;
      const int s = base_sign * a.sign * b2.sign;
      out.emplace_back(b2.mono, s > 0 ? c : -c);
    }
    (bar ? prefix.anti : prefix.holo) |= b;
    ++pos;
  };
  for (Mask h = m.holo; h; h &= h - 1) visit(std::countr_zero(h), false);
  for (Mask a = m.anti; a; a &= a - 1) visit(std::countr_zero(a), true);
  return out;
}

namespace {

enum class Part { all, holo, anti };

}  // namespace

static Element differentiate(const ManifoldModel& model, const Element& a, Part part) {
  Element out(a.dim());
  auto keep = [&](const FormMonomial& src, const FormMonomial& dst) {
    if (part == Part::all) return true;
    if (part == Part::holo) return dst.p() == src.p() + 1;
    return dst.q() == src.q() + 1;
  };
  Character last;
  Element theta = model.dlog(last);
  for (const auto& [key, c] : a.terms()) {
    if (!(key.chi == last)) {
      last = key.chi;
      theta = model.dlog(last);
    }
    for (const auto& [tk, tc] : theta.terms()) {
      SignedMonomial sm = wedge(tk.mono, key.mono);
      if (sm.sign == 0 || !keep(key.mono, sm.mono)) continue;
      out.add_term(key.chi, sm.mono, sm.sign > 0 ? c * tc : -(c * tc));
    }
    for (const auto& [mono, dc] : model.d_monomial(key.mono)) {
      if (!keep(key.mono, mono)) continue;
      out.add_term(key.chi, mono, c * dc);
    }
  }
  return out;
}

Element ManifoldModel::d(const Element& a) const { return differentiate(*this, a, Part::all); }
Element ManifoldModel::del(const Element& a) const { return differentiate(*this, a, Part::holo); }
Element ManifoldModel::delbar(const Element& a) const { return differentiate(*this, a, Part::anti); }
Element ManifoldModel::ddbar(const Element& a) const { return del(delbar(a)); }

Element ManifoldModel::apply(OpKind kind, const Element& a) const {
  switch (kind) {
    case OpKind::d: return d(a);
    case OpKind::del: return del(a);
    case OpKind::delbar: return delbar(a);
    case OpKind::ddbar: return ddbar(a);
  }
  return zero();
}

bool check_nilpotent_J(const ManifoldModel& m) {
  const int n = m.n();
  Mask extracted = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    Mask added = 0;
    for (int j = 0; j < n; ++j) {
      if (extracted & (Mask(1) << j)) continue;
      const Element& dphi = m.data().structure[j];
      const bool inside = std::all_of(dphi.terms().begin(), dphi.terms().end(), [&](const auto& t) {
        return t.first.chi.is_trivial() && (t.first.mono.holo & ~extracted) == 0 &&
               (t.first.mono.anti & ~extracted) == 0;
      });
      if (inside) added |= Mask(1) << j;
    }
    if (added) {
      extracted |= added;
      progress = true;
    }
  }
  return std::popcount(extracted) == n;
}

std::vector<Bidegree> target_bidegrees(OpKind kind, int n, int p, int q) {
  std::vector<Bidegree> out;
  auto push = [&](int a, int b) {
    if (a <= n && b <= n) out.push_back({a, b});
  };
  switch (kind) {
    case OpKind::d:
      push(p + 1, q);
      push(p, q + 1);
      break;
    case OpKind::del: push(p + 1, q); break;
    case OpKind::delbar: push(p, q + 1); break;
    case OpKind::ddbar: push(p + 1, q + 1); break;
  }
  return out;
}

OperatorBlock operator_block(const ManifoldModel& m, OpKind kind, const Character& chi, int p, int q) {
  const int n = m.n();
  const MonomialBasis src(n, p, q);
  OperatorBlock block{kind, chi, {p, q}, target_bidegrees(kind, n, p, q), {}};
  std::vector<MonomialBasis> tgt;
  std::vector<int> offsets;
  int rows = 0;
  for (const auto& b : block.targets) {
    tgt.emplace_back(n, b.p, b.q);
    offsets.push_back(rows);
    rows += tgt.back().size();
  }
  block.matrix = SparseMatrix(rows, src.size());
  for (int j = 0; j < src.size(); ++j) {
    const Element img = m.apply(kind, Element::monomial(n, src[j], 1, chi));
    std::vector<SparseVector::Entry> entries;
    for (const auto& [key, c] : img.terms()) {
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        const int idx = tgt[t].index_of(key.mono);
        if (idx >= 0) {
          entries.emplace_back(offsets[t] + idx, c);
          break;
        }
      }
    }
    block.matrix.columns[j] = SparseVector::from_entries(std::move(entries));
  }
  return block;
}

SparseVector to_coordinates(const Element& a, const Character& chi, const MonomialBasis& basis) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [key, c] : a.terms()) {
    if (!(key.chi == chi)) continue;
    const int idx = basis.index_of(key.mono);
    if (idx >= 0) entries.emplace_back(idx, c);
  }
  return SparseVector::from_entries(std::move(entries));
}

Element from_coordinates(const SparseVector& v, const Character& chi, const MonomialBasis& basis) {
  Element out(basis.n());
  for (const auto& [i, c] : v.entries()) out.add_term(chi, basis[i], c);
  return out;
}

std::vector<Character> close_under_inverse(std::vector<Character> s) {
  std::set<Character> out(s.begin(), s.end());
  for (const auto& c : s) out.insert(c.inverse());
  out.insert(Character{});
  return {out.begin(), out.end()};
}

}  // namespace solvcoh

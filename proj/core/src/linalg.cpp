#include "solvcoh/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace solvcoh {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
      if (out.entries_.back().second.is_zero()) out.entries_.pop_back();
    } else if (!e.second.is_zero()) {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

SparseVector SparseVector::unit(int index, const Scalar& c) {
  SparseVector v;
  if (!c.is_zero()) v.entries_.emplace_back(index, c);
  return v;
}

Scalar SparseVector::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : Scalar{};
}

void SparseVector::axpy(const Scalar& a, const SparseVector& x) {
  if (a.is_zero() || x.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= c;
  }
  return *this;
}

SparseVector SparseVector::conj() const {
  SparseVector out = *this;
  for (auto& e : out.entries_) e.second = e.second.conj();
  return out;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar s;
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [j, c] : x.entries()) {
    for (const auto& [i, v] : columns.at(j).entries()) acc.emplace_back(i, c * v);
  }
  return SparseVector::from_entries(std::move(acc));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> rows_acc(rows);
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c].entries()) rows_acc[r].emplace_back(c, v);
  }
  SparseMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r) t.columns[r] = SparseVector::from_entries(std::move(rows_acc[r]));
  return t;
}

SparseMatrix SparseMatrix::conjugate_transpose() const {
  SparseMatrix t = transpose();
  for (auto& col : t.columns) col = col.conj();
  return t;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
  SparseMatrix out(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) out.columns[j] = a.apply(b.columns[j]);
  return out;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in add");
  SparseMatrix out = a;
  for (int j = 0; j < a.cols; ++j) out.columns[j].axpy(1, b.columns[j]);
  return out;
}

SparseMatrix stack_rows(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols != bottom.cols) throw std::invalid_argument("column mismatch in stack_rows");
  SparseMatrix out(top.rows + bottom.rows, top.cols);
  for (int j = 0; j < top.cols; ++j) {
    std::vector<SparseVector::Entry> e = top.columns[j].entries();
    for (const auto& [i, v] : bottom.columns[j].entries()) e.emplace_back(i + top.rows, v);
    out.columns[j] = SparseVector::from_entries(std::move(e));
  }
  return out;
}

SparseMatrix adjoint(const SparseMatrix& a, const std::vector<Rational>& gram_source,
                     const std::vector<Rational>& gram_target) {
  if (static_cast<int>(gram_source.size()) != a.cols ||
      static_cast<int>(gram_target.size()) != a.rows) {
    throw std::invalid_argument("Gram size mismatch in adjoint");
  }
  std::vector<std::vector<SparseVector::Entry>> acc(a.rows);
  for (int j = 0; j < a.cols; ++j) {
    for (const auto& [i, v] : a.columns[j].entries()) {
      acc[i].emplace_back(j, v.conj() * Scalar(gram_target[i] / gram_source[j]));
    }
  }
  SparseMatrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i) out.columns[i] = SparseVector::from_entries(std::move(acc[i]));
  return out;
}

SparseVector Echelon::reduce(SparseVector v, SparseVector* combo) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto& [idx, val] = v.entries()[pos];
    auto it = pivot_row_.find(idx);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const Row& row = rows_[it->second];
    const Scalar factor = val;
    if (combo) combo->axpy(-factor, row.combo);
    v.axpy(-factor, row.vec);
  }
  return v;
}

bool Echelon::insert(SparseVector v, SparseVector combo) {
  v = reduce(std::move(v), &combo);
  if (v.empty()) return false;
  const Scalar inv = v.entries().front().second.inverse();
  v *= inv;
  combo *= inv;
  pivot_row_.emplace(v.leading_index(), static_cast<int>(rows_.size()));
  rows_.push_back(Row{std::move(v), std::move(combo)});
  return true;
}

SparseVector Echelon::annihilator(const SparseVector& remainder) const {
  if (remainder.empty()) throw std::invalid_argument("annihilator of a zero remainder");
  const int k = remainder.leading_index();
  if (is_pivot(k)) throw std::invalid_argument("remainder is not reduced");
  std::map<int, Scalar> y;
  y[k] = 1;
  std::vector<const Row*> order;
  order.reserve(rows_.size());
  for (const auto& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const Row* a, const Row* b) { return a->vec.leading_index() > b->vec.leading_index(); });
  for (const Row* r : order) {
    Scalar s;
    const int p = r->vec.leading_index();
    for (const auto& [j, val] : r->vec.entries()) {
      if (j == p) continue;
      auto it = y.find(j);
      if (it != y.end()) s += it->second * val;
    }
    if (!s.is_zero()) y[p] = -s;
  }
  std::vector<SparseVector::Entry> e(y.begin(), y.end());
  return SparseVector::from_entries(std::move(e));
}

void Echelon::make_reduced() {
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rows_[a].vec.leading_index() > rows_[b].vec.leading_index();
  });
  for (int ri : order) {
    Row& row = rows_[ri];
    const int own = row.vec.leading_index();
    std::size_t pos = 1;
    while (pos < row.vec.size()) {
      const int idx = row.vec.entries()[pos].first;
      auto it = pivot_row_.find(idx);
      if (it == pivot_row_.end() || idx == own) {
        ++pos;
        continue;
      }
      const Row& other = rows_[it->second];
      const Scalar factor = row.vec.entries()[pos].second;
      row.combo.axpy(-factor, other.combo);
      row.vec.axpy(-factor, other.vec);
    }
  }
}

int rank(const SparseMatrix& m) {
  // Eliminate over the shorter side.
  Echelon e;
  if (m.cols <= m.rows) {
    for (const auto& c : m.columns) e.insert(c);
  } else {
    const SparseMatrix t = m.transpose();
    for (const auto& c : t.columns) e.insert(c);
  }
  return e.rank();
}

std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b) {
  Echelon e;
  for (int j = 0; j < a.cols; ++j) e.insert(a.columns[j], SparseVector::unit(j));
  SparseVector combo;
  if (!e.reduce(b, &combo).empty()) return std::nullopt;
  combo *= Scalar(-1);
  return combo;
}

std::vector<SparseVector> joint_kernel(const std::vector<const SparseMatrix*>& ms) {
  if (ms.empty()) throw std::invalid_argument("joint_kernel of nothing");
  const int cols = ms.front()->cols;
  Echelon e;
  for (const SparseMatrix* m : ms) {
    if (m->cols != cols) throw std::invalid_argument("column mismatch in joint_kernel");
    const SparseMatrix t = m->transpose();
    for (const auto& row : t.columns) e.insert(row);
  }
  e.make_reduced();
  std::map<int, std::vector<SparseVector::Entry>> acc;
  for (int c = 0; c < cols; ++c) {
    if (!e.is_pivot(c)) acc[c].emplace_back(c, Scalar(1));
  }
  for (const auto& row : e.rows()) {
    const int p = row.vec.leading_index();
    for (const auto& [c, v] : row.vec.entries()) {
      if (c != p) acc.at(c).emplace_back(p, -v);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(acc.size());
  for (auto& [c, entries] : acc) out.push_back(SparseVector::from_entries(std::move(entries)));
  return out;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) { return joint_kernel({&m}); }

}  // namespace solvcoh

#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solvcoh/scalar.hpp"

namespace solvcoh {

/// Sparse vector over Q(i): strictly increasing indices, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseVector() = default;
  /// Entries may be unsorted and contain duplicates or zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(int index, const Scalar& c = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int leading_index() const { return entries_.front().first; }
  Scalar at(int index) const;

  /// this += a * x
  void axpy(const Scalar& a, const SparseVector& x);
  SparseVector& operator*=(const Scalar& c);
  SparseVector conj() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Bilinear pairing sum_k a_k b_k (no conjugation).
Scalar dot(const SparseVector& a, const SparseVector& b);

/// Column-major sparse matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  SparseVector apply(const SparseVector& x) const;
  SparseMatrix transpose() const;
  SparseMatrix conjugate_transpose() const;
  bool is_zero() const;
  Scalar at(int r, int c) const { return columns[c].at(r); }
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
/// Rows of `top` followed by rows of `bottom` (same column count).
SparseMatrix stack_rows(const SparseMatrix& top, const SparseMatrix& bottom);
/// Adjoint with respect to diagonal positive Gram matrices on source/target:
/// A* = G_src^{-1} A^H G_tgt.
SparseMatrix adjoint(const SparseMatrix& a, const std::vector<Rational>& gram_source,
                     const std::vector<Rational>& gram_target);

/// Incremental semi-echelon basis. Every stored row has leading coefficient
/// 1 at a distinct pivot index. When combinations are tracked, each row
/// also records how it was obtained from the inserted generators.
class Echelon {
 public:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };

  /// Reduces v against the basis. On return v_in = remainder + sum of
  /// multiples of rows; if `combo` is given, it is updated so that
  /// (v_in's combo) - (accumulated row combos) is the remainder's combo.
  SparseVector reduce(SparseVector v, SparseVector* combo = nullptr) const;
  /// Inserts v (whose generator combination is `combo`). Returns false if v
  /// was dependent on the current rows.
  bool insert(SparseVector v, SparseVector combo = {});

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(int index) const { return pivot_row_.count(index) != 0; }

  /// Given a nonzero fully reduced remainder r, returns y with
  /// dot(y, row) = 0 for every row and dot(y, r) = r_k != 0.
  SparseVector annihilator(const SparseVector& remainder) const;

  /// Brings the rows to reduced row echelon form (zero at other pivots).
  void make_reduced();

 private:
  std::vector<Row> rows_;
  std::unordered_map<int, int> pivot_row_;
};

int rank(const SparseMatrix& m);
/// Some x with a x = b (free variables zero), or nullopt.
std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b);
/// Kernel basis in reduced form: one vector per free column, ascending.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Kernel of the stacked matrix [m_1; m_2; ...] (all with equal column count).
std::vector<SparseVector> joint_kernel(const std::vector<const SparseMatrix*>& ms);

}  // namespace solvcoh

#ifndef LIEMULT_LINALG_HPP
#define LIEMULT_LINALG_HPP

// Exact linear algebra over the rationals: dense reduced row echelon forms
// for small systems and an incremental sparse echelon for the large
// subspaces that appear inside free nilpotent Lie algebras.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liemult {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<int, Scalar>>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Scalar(0)); }

inline Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

inline SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

inline Vec to_dense(const SparseVec& v, int n) {
  Vec out = zero_vec(n);
  for (const auto& [i, x] : v) out[static_cast<std::size_t>(i)] = x;
  return out;
}

/// a + s*b for sparse operands.
inline SparseVec axpy(const SparseVec& a, const Scalar& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + s * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec scaled(const SparseVec& a, const Scalar& s) {
  if (sgn(s) == 0) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= s;
  return out;
}

struct RowEchelon {
  Matrix rows;              // nonzero rows in reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form of `rows` (each of length `ncols`).
inline RowEchelon rref(Matrix rows, int ncols) {
  RowEchelon out;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = 1 / rows[r][static_cast<std::size_t>(c)];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r) continue;
      const Scalar f = rows[q][static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (int k = c; k < ncols; ++k)
        rows[q][static_cast<std::size_t>(k)] -= f * rows[r][static_cast<std::size_t>(k)];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

inline int rank(const Matrix& rows, int ncols) {
  return static_cast<int>(rref(rows, ncols).pivots.size());
}

/// Basis of {x : A x = 0} where A has `ncols` columns.
inline Matrix kernel(const Matrix& a, int ncols) {
  const RowEchelon e = rref(a, ncols);
  std::vector<int> pivot_row(static_cast<std::size_t>(ncols), -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    pivot_row[static_cast<std::size_t>(e.pivots[r])] = static_cast<int>(r);
  Matrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (pivot_row[static_cast<std::size_t>(f)] >= 0) continue;
    Vec v = unit_vec(ncols, f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.rows[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b (free variables set to zero), if any exists.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b, int ncols) {
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const RowEchelon e = rref(std::move(aug), ncols + 1);
  Vec x = zero_vec(ncols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == ncols) return std::nullopt;
    x[static_cast<std::size_t>(e.pivots[r])] = e.rows[r][static_cast<std::size_t>(ncols)];
  }
  return x;
}

inline Matrix transpose(const Matrix& a, int ncols) {
  Matrix t(static_cast<std::size_t>(ncols), zero_vec(static_cast<int>(a.size())));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (int c = 0; c < ncols; ++c) t[static_cast<std::size_t>(c)][r] = a[r][static_cast<std::size_t>(c)];
  return t;
}

/// Incrementally built echelon basis of a subspace of Q^dim, stored sparsely.
///
/// Rows are kept in semi-echelon form: every row has a distinct pivot, its
/// pivot entry is 1, and it has no support before its pivot in the column
/// order. The column order is ascending by default and descending when
/// `reverse` is set, which selects the opposite standard-vector complement.
/// Reducing a vector clears every pivot column, so the remainder is supported
/// on the complement spanned by the non-pivot standard vectors.
class Echelon {
 public:
  explicit Echelon(int dim, bool reverse = false)
      : dim_(dim), reverse_(reverse), pivot_row_(static_cast<std::size_t>(dim), -1) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool reversed() const { return reverse_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

  /// Columns that are not pivots, in ascending order.
  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < dim_; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

  SparseVec reduce(const SparseVec& v) const {
    Vec acc = zero_vec(dim_);
    for (const auto& [i, x] : v) acc[static_cast<std::size_t>(i)] = x;
    reduce_dense(acc);
    return to_sparse(acc);
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const SparseVec& v) {
    Vec acc = zero_vec(dim_);
    for (const auto& [i, x] : v) acc[static_cast<std::size_t>(i)] = x;
    reduce_dense(acc);
    int pivot = -1;
    for (int k = 0; k < dim_ && pivot < 0; ++k) {
      const int c = column(k);
      if (sgn(acc[static_cast<std::size_t>(c)]) != 0) pivot = c;
    }
    if (pivot < 0) return false;
    const Scalar inv = 1 / acc[static_cast<std::size_t>(pivot)];
    for (auto& x : acc) x *= inv;
    pivot_row_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
    rows_.push_back(to_sparse(acc));
    return true;
  }

 private:
  int column(int k) const { return reverse_ ? dim_ - 1 - k : k; }

  void reduce_dense(Vec& acc) const {
    if (rows_.empty()) return;
    for (int k = 0; k < dim_; ++k) {
      const auto c = static_cast<std::size_t>(column(k));
      if (sgn(acc[c]) == 0) continue;
      const int r = pivot_row_[c];
      if (r < 0) continue;
      const Scalar f = acc[c];
      for (const auto& [i, x] : rows_[static_cast<std::size_t>(r)]) acc[static_cast<std::size_t>(i)] -= f * x;
    }
  }

  int dim_;
  bool reverse_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec> rows_;
};

inline std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace liemult

#endif  // LIEMULT_LINALG_HPP

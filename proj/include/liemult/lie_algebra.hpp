#ifndef LIEMULT_LIE_ALGEBRA_HPP
#define LIEMULT_LIE_ALGEBRA_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liemult/errors.hpp"
#include "liemult/linalg.hpp"

namespace liemult {

/// One nonzero product of basis vectors, [x_i, x_j] = value, with 0-based
/// indices. Text formats and reports use 1-based indices.
struct Product {
  int i = 0;
  int j = 0;
  SparseVec value;
};

/// A finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis x_0 .. x_{n-1}. Only [x_i, x_j] with i < j is stored;
/// antisymmetry holds by construction. The Jacobi identity is not enforced
/// here, see validate().
class LieAlgebra {
 public:
  explicit LieAlgebra(int n = 0) : n_(n), table_(pair_count(n)) {
    if (n < 0) throw std::invalid_argument("negative dimension");
  }

  LieAlgebra(int n, const std::vector<Product>& products, std::vector<std::string> labels = {})
      : LieAlgebra(n) {
    for (const auto& p : products) {
      if (p.i < 0 || p.j < 0 || p.i >= n || p.j >= n || p.i == p.j)
        throw std::invalid_argument("bad bracket indices");
      for (const auto& [k, c] : p.value)
        if (k < 0 || k >= n) throw std::invalid_argument("bad bracket target");
      auto& slot = table_[index(std::min(p.i, p.j), std::max(p.i, p.j))];
      if (!slot.empty()) throw std::invalid_argument("bracket given twice");
      SparseVec v = p.value;
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      v.erase(std::remove_if(v.begin(), v.end(), [](const auto& e) { return sgn(e.second) == 0; }), v.end());
      slot = p.i < p.j ? std::move(v) : scaled(v, -1);
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("label count does not match dimension");
    labels_ = std::move(labels);
  }

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [x_i, x_j] for any i, j (0-based).
  SparseVec basis_bracket(int i, int j) const {
    if (i == j) return {};
    if (i < j) return table_[index(i, j)];
    return scaled(table_[index(j, i)], -1);
  }

  /// Stored constants for i < j without copying.
  const SparseVec& structure(int i, int j) const { return table_[index(i, j)]; }

  bool is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
  }

  /// Nonzero products with i < j, in (i, j) order.
  std::vector<Product> products() const {
    std::vector<Product> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!structure(i, j).empty()) out.push_back({i, j, structure(i, j)});
    return out;
  }

  SparseVec bracket(const SparseVec& u, const SparseVec& v) const {
    Vec acc = zero_vec(n_);
    bool any = false;
    for (const auto& [a, ua] : u) {
      for (const auto& [b, vb] : v) {
        if (a == b) continue;
        const bool forward = a < b;
        const SparseVec& s = forward ? structure(a, b) : structure(b, a);
        if (s.empty()) continue;
        Scalar f = ua * vb;
        if (!forward) f = -f;
        for (const auto& [k, c] : s) acc[static_cast<std::size_t>(k)] += f * c;
        any = true;
      }
    }
    return any ? to_sparse(acc) : SparseVec{};
  }

  Vec bracket(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != n_) throw DimensionMismatch(u.size(), n_);
    if (static_cast<int>(v.size()) != n_) throw DimensionMismatch(v.size(), n_);
    return to_dense(bracket(to_sparse(u), to_sparse(v)), n_);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  static std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

  std::size_t index(int i, int j) const {
    // Row-major position of (i, j), i < j, in the strict upper triangle.
    const auto ii = static_cast<std::size_t>(i);
    const auto nn = static_cast<std::size_t>(n_);
    return ii * nn - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
  }

  int n_;
  std::vector<SparseVec> table_;
  std::vector<std::string> labels_;
};

/// A subspace of Q^n held as a reduced row echelon basis, which makes the
/// representation canonical: equal subspaces have equal rows.
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : ambient_(ambient) {}

  static Subspace span(int ambient, Matrix vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != ambient) throw DimensionMismatch(v.size(), ambient);
    RowEchelon e = rref(std::move(vectors), ambient);
    s.rows_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace whole(int ambient) {
    Matrix id;
    for (int i = 0; i < ambient; ++i) id.push_back(unit_vec(ambient, i));
    return span(ambient, std::move(id));
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Matrix& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Remainder of v after clearing the pivot columns; zero iff v is in the span.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar f = v[static_cast<std::size_t>(pivots_[r])];
      if (sgn(f) == 0) continue;
      for (int k = 0; k < ambient_; ++k) v[static_cast<std::size_t>(k)] -= f * rows_[r][static_cast<std::size_t>(k)];
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of v (assumed in the span) with respect to basis().
  Vec coordinates(const Vec& v) const {
    Vec out;
    for (int p : pivots_) out.push_back(v[static_cast<std::size_t>(p)]);
    return out;
  }

  /// Standard basis indices completing this basis: the non-pivot columns.
  std::vector<int> complement_indices() const {
    std::vector<int> out;
    std::size_t r = 0;
    for (int c = 0; c < ambient_; ++c) {
      if (r < pivots_.size() && pivots_[r] == c) {
        ++r;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  Subspace operator+(const Subspace& other) const {
    Matrix all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(ambient_, std::move(all));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_;
  Matrix rows_;
  std::vector<int> pivots_;
};

struct ValidationReport {
  bool ok = true;
  /// First failing triple, 1-based, i < j < k.
  std::optional<std::array<int, 3>> triple;
  /// [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] at that triple.
  Vec defect;
};

inline SparseVec jacobiator(const LieAlgebra& l, int i, int j, int k) {
  auto term = [&](int a, int b, int c) { return l.bracket(l.basis_bracket(a, b), SparseVec{{c, Scalar(1)}}); };
  SparseVec s = axpy(term(i, j, k), 1, term(j, k, i));
  return axpy(s, 1, term(k, i, j));
}

/// Checks the Jacobi identity on every basis triple i < j < k.
inline ValidationReport validate(const LieAlgebra& l) {
  const int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        SparseVec d = jacobiator(l, i, j, k);
        if (!d.empty()) return {false, std::array<int, 3>{i + 1, j + 1, k + 1}, to_dense(d, n)};
      }
  return {};
}

inline LieAlgebra abelian(int n) {
  if (n < 1) throw std::invalid_argument("abelian: dimension must be positive");
  return LieAlgebra(n);
}

/// H(m): [x_{2i-1}, x_{2i}] = x_{2m+1} for 1 <= i <= m.
inline LieAlgebra heisenberg(int m) {
  if (m < 1) throw std::invalid_argument("heisenberg: m must be positive");
  std::vector<Product> ps;
  for (int i = 0; i < m; ++i) ps.push_back({2 * i, 2 * i + 1, {{2 * m, Scalar(1)}}});
  return LieAlgebra(2 * m + 1, ps);
}

/// Block sum; the basis of `b` follows the basis of `a`.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int off = a.dim();
  std::vector<Product> ps = a.products();
  for (auto p : b.products()) {
    p.i += off;
    p.j += off;
    for (auto& e : p.value) e.first += off;
    ps.push_back(std::move(p));
  }
  return LieAlgebra(a.dim() + b.dim(), ps);
}

}  // namespace liemult

#endif  // LIEMULT_LIE_ALGEBRA_HPP

#ifndef LIEMULT_STRUCTURE_HPP
#define LIEMULT_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

/// Which standard basis vectors complete an echelon basis: the
/// lexicographically first ones, or the last ones.
enum class ComplementOrder { First, Last };

namespace detail {

/// Basis of the common kernel of a system given by sparse rows.
inline Matrix sparse_kernel(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.rank() == ncols) break;
  }
  Matrix dense;
  for (const auto& r : e.rows()) dense.push_back(to_dense(r, ncols));
  return kernel(dense, ncols);
}

inline Echelon echelon_of(const Subspace& s, ComplementOrder order) {
  Echelon e(s.ambient(), order == ComplementOrder::Last);
  for (const auto& v : s.basis()) e.insert(to_sparse(v));
  return e;
}

}  // namespace detail

/// Span of [a, b] for a in A, b in B.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  Echelon e(l.dim());
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) e.insert(l.bracket(to_sparse(u), to_sparse(v)));
  Matrix rows;
  for (const auto& r : e.rows()) rows.push_back(to_dense(r, l.dim()));
  return Subspace::span(l.dim(), std::move(rows));
}

/// L^2 = [L, L].
inline Subspace derived_subalgebra(const LieAlgebra& l) {
  const int n = l.dim();
  Echelon e(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!l.structure(i, j).empty()) e.insert(l.structure(i, j));
  Matrix rows;
  for (const auto& r : e.rows()) rows.push_back(to_dense(r, n));
  return Subspace::span(n, std::move(rows));
}

/// {u : [u, w] in below for all w in L}. With below = 0 this is Z(L).
inline Subspace centralizer_mod(const LieAlgebra& l, const Subspace& below) {
  const int n = l.dim();
  const Echelon mod = detail::echelon_of(below, ComplementOrder::First);
  // Row (i, k): coefficient of x_k in [u, x_i] mod below, as a function of u.
  std::vector<Vec> rows(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), zero_vec(n));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      SparseVec v = mod.reduce(l.basis_bracket(a, i));
      for (const auto& [k, c] : v)
        rows[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)]
            [static_cast<std::size_t>(a)] = c;
    }
  std::vector<SparseVec> sparse;
  for (const auto& r : rows)
    if (!is_zero(r)) sparse.push_back(to_sparse(r));
  return Subspace::span(n, detail::sparse_kernel(sparse, n));
}

inline Subspace center(const LieAlgebra& l) { return centralizer_mod(l, Subspace(l.dim())); }

inline bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (const auto& v : s.basis())
    for (int i = 0; i < l.dim(); ++i)
      if (!s.contains(l.bracket(v, unit_vec(l.dim(), i)))) return false;
  return true;
}

struct SeriesReport {
  /// L = L^1 > L^2 > ... > L^{c+1} = 0.
  std::vector<Subspace> lower;
  /// 0 = Z_0 < Z_1 = Z(L) < ... < Z_c = L.
  std::vector<Subspace> upper;
  int nilpotency_class = 0;
};

inline SeriesReport central_series(const LieAlgebra& l) {
  const int n = l.dim();
  SeriesReport out;
  const Subspace whole = Subspace::whole(n);
  out.lower.push_back(whole);
  while (out.lower.back().dim() > 0) {
    Subspace next = bracket_span(l, out.lower.back(), whole);
    if (next.dim() == out.lower.back().dim()) throw NotNilpotent();
    out.lower.push_back(std::move(next));
  }
  out.nilpotency_class = static_cast<int>(out.lower.size()) - 1;
  out.upper.push_back(Subspace(n));
  while (out.upper.back().dim() < n) {
    Subspace next = centralizer_mod(l, out.upper.back());
    if (next.dim() == out.upper.back().dim()) throw NotNilpotent();
    out.upper.push_back(std::move(next));
  }
  return out;
}

inline int nilpotency_class(const LieAlgebra& l) { return central_series(l).nilpotency_class; }

struct QuotientResult {
  LieAlgebra algebra;
  /// Standard basis indices of L whose cosets form the quotient basis.
  std::vector<int> basis_indices;
};

/// L / I for an ideal I held as an echelon basis. The caller guarantees that
/// I is an ideal.
inline QuotientResult quotient_by_echelon(const LieAlgebra& l, const Echelon& ideal) {
  QuotientResult out;
  out.basis_indices = ideal.free_columns();
  const auto& idx = out.basis_indices;
  std::vector<int> position(static_cast<std::size_t>(l.dim()), -1);
  for (std::size_t q = 0; q < idx.size(); ++q) position[static_cast<std::size_t>(idx[q])] = static_cast<int>(q);
  std::vector<Product> ps;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      SparseVec r = ideal.reduce(l.basis_bracket(idx[a], idx[b]));
      if (r.empty()) continue;
      for (auto& e : r) e.first = position[static_cast<std::size_t>(e.first)];
      ps.push_back({static_cast<int>(a), static_cast<int>(b), std::move(r)});
    }
  out.algebra = LieAlgebra(static_cast<int>(idx.size()), ps);
  return out;
}

inline QuotientResult quotient_with_basis(const LieAlgebra& l, const Subspace& ideal,
                                          ComplementOrder order = ComplementOrder::First) {
  if (ideal.ambient() != l.dim()) throw DimensionMismatch(static_cast<std::size_t>(ideal.ambient()), l.dim());
  if (!is_ideal(l, ideal)) throw NotAnIdeal();
  return quotient_by_echelon(l, detail::echelon_of(ideal, order));
}

inline LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal,
                           ComplementOrder order = ComplementOrder::First) {
  return quotient_with_basis(l, ideal, order).algebra;
}

struct GeneralizedHeisenberg {
  bool holds = false;
  int rank = 0;
};

/// L^2 = Z(L); the rank is dim L^2.
inline GeneralizedHeisenberg is_generalized_heisenberg(const LieAlgebra& l) {
  const Subspace d = derived_subalgebra(l);
  if (d == center(l)) return {true, d.dim()};
  return {};
}

}  // namespace liemult

#endif  // LIEMULT_STRUCTURE_HPP

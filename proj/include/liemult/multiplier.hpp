#ifndef LIEMULT_MULTIPLIER_HPP
#define LIEMULT_MULTIPLIER_HPP

// Dimension of the Schur multiplier through second cohomology with trivial
// coefficients: dim M(L) = dim Z^2(L) - dim B^2(L), where B^2 has dimension
// dim L^2.

#include <optional>
#include <string>
#include <vector>

#include "liemult/structure.hpp"

namespace liemult {

struct MultiplierReport {
  int n = 0;
  int dim_Z2 = 0;
  int dim_B2 = 0;
  int dim_M = 0;
  /// Unset for abelian algebras.
  std::optional<int> s;
  int t = 0;
};

inline long long choose2(long long n) { return n * (n - 1) / 2; }

/// Dimension of the space of alternating bilinear forms f on L with
/// f([x,y],z) + f([y,z],x) + f([z,x],y) = 0.
inline int two_cocycle_dim(const LieAlgebra& l) {
  const int n = l.dim();
  const int unknowns = static_cast<int>(choose2(n));
  // Column of the unknown f(x_a, x_b), a < b.
  auto col = [n](int a, int b) { return a * n - a * (a + 1) / 2 + (b - a - 1); };
  Echelon e(unknowns);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec row = zero_vec(unknowns);
        auto add = [&](int p, int q, int z) {
          for (const auto& [a, c] : l.basis_bracket(p, q)) {
            if (a == z) continue;
            if (a < z)
              row[static_cast<std::size_t>(col(a, z))] += c;
            else
              row[static_cast<std::size_t>(col(z, a))] -= c;
          }
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        if (!is_zero(row)) e.insert(to_sparse(row));
      }
  return unknowns - e.rank();
}

inline MultiplierReport multiplier_report(const LieAlgebra& l) {
  // Nilpotency is a precondition of the s/t formulas.
  (void)nilpotency_class(l);
  MultiplierReport r;
  r.n = l.dim();
  r.dim_Z2 = two_cocycle_dim(l);
  r.dim_B2 = derived_subalgebra(l).dim();
  r.dim_M = r.dim_Z2 - r.dim_B2;
  r.t = static_cast<int>(choose2(r.n)) - r.dim_M;
  if (r.dim_B2 > 0) r.s = static_cast<int>(choose2(r.n - 1)) + 1 - r.dim_M;
  return r;
}

inline int schur_multiplier_dim(const LieAlgebra& l) { return multiplier_report(l).dim_M; }

inline int s_invariant(const LieAlgebra& l) {
  const MultiplierReport r = multiplier_report(l);
  if (!r.s) throw AbelianInput();
  return *r.s;
}

inline int t_invariant(const LieAlgebra& l) { return multiplier_report(l).t; }

/// dim M(L + A(k)) from dim M(L) and dim L/L^2.
inline long long kunneth_dim(long long dim_M_L, long long dim_ab_L, long long k) {
  if (dim_M_L < 0 || dim_ab_L < 0 || k < 0) throw std::invalid_argument("kunneth_dim: negative input");
  return dim_M_L + k * dim_ab_L + choose2(k);
}

struct BoundCheck {
  std::string label;
  bool applicable = true;
  long long lhs = 0;  // dim M(L) or n - 3
  long long rhs = 0;  // bound (or s(L) for the non-capable check)
  bool holds = true;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.holds; });
  }
};

/// Upper bounds on dim M(L) in terms of n and m = dim L^2, plus the lower
/// bound n - 3 < s(L) for non-capable L with m >= 2. A failing entry means
/// an upstream computation is wrong.
inline BoundReport bound_checks(const LieAlgebra& l, std::optional<bool> noncapable_hint = std::nullopt) {
  const MultiplierReport r = multiplier_report(l);
  const long long n = r.n, m = r.dim_B2, dm = r.dim_M;
  BoundReport out;
  out.checks.push_back({"dim M <= n(n-1)/2", true, dm, choose2(n), dm <= choose2(n)});
  {
    const long long b = choose2(n - 1) + 1;
    out.checks.push_back({"dim M <= (n-1)(n-2)/2 + 1", m > 0, dm, b, m == 0 || dm <= b});
  }
  {
    // (n+m-2)(n-m-1) is even: the factors differ by 2m-1, which is odd.
    const long long b = (n + m - 2) * (n - m - 1) / 2 + 1;
    out.checks.push_back({"dim M <= (n+m-2)(n-m-1)/2 + 1", m > 0, dm, b, m == 0 || dm <= b});
  }
  {
    const bool applicable = noncapable_hint.value_or(false) && m >= 2;
    const long long s = r.s.value_or(0);
    out.checks.push_back({"n - 3 < s(L) (non-capable, dim L^2 >= 2)", applicable, n - 3, s, !applicable || n - 3 < s});
  }
  return out;
}

}  // namespace liemult

#endif  // LIEMULT_MULTIPLIER_HPP

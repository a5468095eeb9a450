#ifndef LIEMULT_TEST_JACOBI_ORACLE_HPP
#define LIEMULT_TEST_JACOBI_ORACLE_HPP

// Independent Jacobi check on a dense int64 structure tensor, plus the
// single-constant mutation used by the fuzzing tests.

#include <random>
#include <stdexcept>
#include <vector>

#include "liemult/liemult.hpp"

namespace oracle {

using liemult::LieAlgebra;

/// c[i][j][k] = coefficient of x_k in [x_i, x_j].
using Tensor = std::vector<std::vector<std::vector<long long>>>;

inline Tensor tensor_of(const LieAlgebra& l) {
  const int n = l.dim();
  Tensor c(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  for (const auto& p : l.products())
    for (const auto& [k, x] : p.value) {
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw std::domain_error("non-integral constant");
      c[p.i][p.j][k] = x.get_num().get_si();
      c[p.j][p.i][k] = -x.get_num().get_si();
    }
  return c;
}

inline bool jacobi_holds(const Tensor& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          long long s = 0;
          for (int l = 0; l < n; ++l) s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
          if (s != 0) return false;
        }
  return true;
}

inline LieAlgebra from_tensor(const Tensor& c) {
  const int n = static_cast<int>(c.size());
  std::vector<liemult::Product> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      liemult::SparseVec v;
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != 0) v.emplace_back(k, liemult::Scalar(static_cast<long>(c[i][j][k])));
      if (!v.empty()) ps.push_back({i, j, v});
    }
  return LieAlgebra(n, ps);
}

/// Changes one structure constant c[i][j][k] (i < j) to a different value in [-3, 4].
inline Tensor mutate(Tensor c, std::mt19937& rng) {
  const int n = static_cast<int>(c.size());
  int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
  while (j == i) j = static_cast<int>(rng() % n);
  if (i > j) std::swap(i, j);
  const int k = static_cast<int>(rng() % n);
  long long value = static_cast<long long>(rng() % 7) - 3;
  if (value == c[i][j][k]) value += 1;
  c[i][j][k] = value;
  c[j][i][k] = -value;
  return c;
}

}  // namespace oracle

#endif  // LIEMULT_TEST_JACOBI_ORACLE_HPP

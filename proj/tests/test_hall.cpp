#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace liemult;
using namespace testutil;

namespace {

// Independent count: Lyndon words of length m over d letters, found by
// testing every word against all of its proper rotations.
long long brute_lyndon_count(int d, int m) {
  long long total = 1;
  for (int k = 0; k < m; ++k) total *= d;
  long long count = 0;
  std::vector<int> w(static_cast<std::size_t>(m));
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int k = m - 1; k >= 0; --k) {
      w[static_cast<std::size_t>(k)] = static_cast<int>(x % d);
      x /= d;
    }
    bool lyndon = true;
    for (int r = 1; r < m && lyndon; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (!(w < rot)) lyndon = false;
    }
    count += lyndon;
  }
  return count;
}

}  // namespace

TEST(Witt, Examples) {
  EXPECT_EQ(witt_dim(2, 5), 6);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(witt_dim(d, 1), d);
  EXPECT_EQ(witt_dim(4, 3), 20);
  EXPECT_EQ(witt_dim(3, 2), 3);
}

TEST(Witt, MatchesBruteForceLyndonCount) {
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 6; ++m) EXPECT_EQ(witt_dim(d, m), brute_lyndon_count(d, m)) << d << "," << m;
}

TEST(Mobius, SmallValues) {
  const std::vector<long long> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::size_t k = 0; k < mu.size(); ++k) EXPECT_EQ(mobius(static_cast<long long>(k) + 1), mu[k]);
}

TEST(HallBasis, Examples) {
  const HallBasis a = hall_basis(2, 3);
  EXPECT_EQ(a.dims_by_degree, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(a.size(), 5);
  const HallBasis b = hall_basis(1, 3);
  EXPECT_EQ(b.dims_by_degree, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(b.size(), 1);
  const HallBasis c = hall_basis(3, 2);
  EXPECT_EQ(c.dims_by_degree, (std::vector<int>{3, 3}));
  EXPECT_EQ(c.size(), 6);
  EXPECT_EQ(a.describe(2), "[x1,x2]");
  EXPECT_EQ(a.describe(3), "[x1,[x1,x2]]");
}

TEST(HallBasis, CountsMatchWitt) {
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 5; ++m) {
      const HallBasis hb = hall_basis(d, m);
      for (int k = 1; k <= m; ++k) EXPECT_EQ(hb.dims_by_degree[static_cast<std::size_t>(k - 1)], witt_dim(d, k));
    }
}

TEST(HallBasis, WordsUniqueAndFactored) {
  const HallBasis hb = hall_basis(3, 5);
  std::set<std::vector<std::uint8_t>> seen;
  for (int i = 0; i < hb.size(); ++i) {
    const HallWord& w = hb.words[static_cast<std::size_t>(i)];
    EXPECT_TRUE(seen.insert(w.letters).second);
    if (w.degree == 1) continue;
    ASSERT_GE(w.left, 0);
    EXPECT_LT(w.left, i);
    EXPECT_LT(w.right, i);
    std::vector<std::uint8_t> joined = hb.words[static_cast<std::size_t>(w.left)].letters;
    const auto& r = hb.words[static_cast<std::size_t>(w.right)].letters;
    joined.insert(joined.end(), r.begin(), r.end());
    EXPECT_EQ(joined, w.letters);
  }
}

TEST(HallBasis, ResourceLimit) {
  EXPECT_THROW(hall_basis(7, 5, 1000), ResourceLimit);
  EXPECT_NO_THROW(hall_basis(7, 2, 1000));
}

TEST(HallBasis, CapFromEnvironment) {
  ::setenv("LIEMULT_BASIS_CAP", "12", 1);
  EXPECT_EQ(basis_cap_from_env(), 12);
  EXPECT_THROW(hall_basis(3, 3, basis_cap_from_env()), ResourceLimit);
  ::setenv("LIEMULT_BASIS_CAP", "junk", 1);
  EXPECT_EQ(basis_cap_from_env(), kDefaultBasisCap);
  ::unsetenv("LIEMULT_BASIS_CAP");
  EXPECT_EQ(basis_cap_from_env(), kDefaultBasisCap);
}

TEST(FreeNilpotent, Examples) {
  EXPECT_EQ(free_nilpotent(2, 2).algebra, heisenberg(1));
  const FreeNilpotent f = free_nilpotent(2, 3);
  EXPECT_EQ(f.algebra.dim(), 5);
  EXPECT_EQ(nilpotency_class(f.algebra), 3);
  const FreeNilpotent g = free_nilpotent(3, 2);
  EXPECT_EQ(g.algebra.dim(), 6);
  EXPECT_EQ(center(g.algebra), span_units(6, {4, 5, 6}));
}

TEST(FreeNilpotent, ValidForSmallParameters) {
  for (int d = 1; d <= 4; ++d)
    for (int c = 1; c <= 4; ++c) {
      const FreeNilpotent f = free_nilpotent(d, c);
      EXPECT_TRUE(validate(f.algebra).ok) << d << "," << c;
      if (d >= 2) {
        EXPECT_EQ(nilpotency_class(f.algebra), c) << d << "," << c;
      }
    }
}

TEST(FreeNilpotent, GradingRespected) {
  const FreeNilpotent f = free_nilpotent(3, 4);
  const auto& w = f.basis.words;
  for (const auto& p : f.algebra.products()) {
    const int deg = w[static_cast<std::size_t>(p.i)].degree + w[static_cast<std::size_t>(p.j)].degree;
    ASSERT_LE(deg, 4);
    for (const auto& [k, c] : p.value) EXPECT_EQ(w[static_cast<std::size_t>(k)].degree, deg);
  }
}

TEST(FreeNilpotent, StandardFactorizationIsTheBracket) {
  const FreeNilpotent f = free_nilpotent(3, 4);
  for (int i = 0; i < f.basis.size(); ++i) {
    const HallWord& w = f.basis.words[static_cast<std::size_t>(i)];
    if (w.left < 0) continue;
    EXPECT_EQ(f.algebra.basis_bracket(w.left, w.right), (SparseVec{{i, Scalar(1)}})) << f.basis.describe(i);
  }
}

TEST(FreeNilpotent, LowerCentralSeriesIsDegreeFiltration) {
  const FreeNilpotent f = free_nilpotent(2, 5);
  const SeriesReport s = central_series(f.algebra);
  int above = f.algebra.dim();
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(s.lower[static_cast<std::size_t>(m - 1)].dim(), above);
    above -= f.basis.dims_by_degree[static_cast<std::size_t>(m - 1)];
  }
}

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace liemult;
using namespace testutil;

TEST(Cocycles, Examples) {
  EXPECT_EQ(two_cocycle_dim(abelian(4)), 6);
  // Every alternating form on H(1) is a cocycle; one of them is a coboundary.
  EXPECT_EQ(two_cocycle_dim(heisenberg(1)), 3);
  EXPECT_EQ(schur_multiplier_dim(heisenberg(1)), 2);
  EXPECT_EQ(two_cocycle_dim(get("L_{5,9}")), 6);
}

TEST(Multiplier, Examples) {
  EXPECT_EQ(schur_multiplier_dim(get("L_{6,22}", {{"eps", Scalar(1)}})), 8);
  EXPECT_EQ(schur_multiplier_dim(get("37B")), 11);
  EXPECT_EQ(schur_multiplier_dim(get("L_{5,9}")), 3);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(schur_multiplier_dim(abelian(n)), n * (n - 1) / 2);
}

TEST(Multiplier, ReportFields) {
  const MultiplierReport r = multiplier_report(get("L_{5,9}"));
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.dim_Z2, 6);
  EXPECT_EQ(r.dim_B2, 3);
  EXPECT_EQ(r.dim_M, 3);
  EXPECT_EQ(r.s, 4);
  EXPECT_EQ(r.t, 7);
}

TEST(Multiplier, NotNilpotent) {
  LieAlgebra l(2, {{0, 1, {{1, Scalar(1)}}}});
  EXPECT_THROW(schur_multiplier_dim(l), NotNilpotent);
}

TEST(Invariants, Examples) {
  EXPECT_EQ(s_invariant(get("37C")), 5);
  EXPECT_EQ(s_invariant(heisenberg(1)), 0);
  EXPECT_EQ(t_invariant(get("L_{5,9}")), 7);
  EXPECT_EQ(s_invariant(get("L_{6,26}")), 3);
  EXPECT_THROW(s_invariant(abelian(3)), AbelianInput);
  EXPECT_EQ(t_invariant(abelian(3)), 0);
}

TEST(Invariants, TMinusSIsNMinus2) {
  for (const auto& e : list_entries()) {
    const MultiplierReport r = multiplier_report(get(e.name));
    ASSERT_TRUE(r.s.has_value()) << e.name;
    EXPECT_EQ(r.t - *r.s, r.n - 2) << e.name;
    EXPECT_EQ(r.dim_B2, derived_subalgebra(get(e.name)).dim()) << e.name;
    EXPECT_GE(r.dim_M, 0);
  }
}

TEST(Invariants, HeisenbergFamilies) {
  EXPECT_EQ(schur_multiplier_dim(heisenberg(1)), 2);
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k) {
      const LieAlgebra l = k ? direct_sum(heisenberg(m), abelian(k)) : heisenberg(m);
      EXPECT_EQ(s_invariant(l), m == 1 ? 0 : 2) << "m=" << m << " k=" << k;
    }
}

TEST(Kunneth, Examples) {
  EXPECT_EQ(kunneth_dim(8, 4, 2), 17);
  EXPECT_EQ(choose2(7) + 1 - 17 + 0, 5);  // s at n = 8
  EXPECT_EQ(kunneth_dim(5, 3, 0), 5);
  EXPECT_EQ(kunneth_dim(2, 2, 3), 11);
}

TEST(Kunneth, MatchesDirectSumOverCatalogue) {
  for (const auto& name : table_names()) {
    const LieAlgebra l = get(name);
    const int dm = schur_multiplier_dim(l);
    const int ab = l.dim() - derived_subalgebra(l).dim();
    for (int k = 1; k <= 3; ++k)
      EXPECT_EQ(schur_multiplier_dim(direct_sum(l, abelian(k))), kunneth_dim(dm, ab, k)) << name << " k=" << k;
  }
}

TEST(Bounds, Examples) {
  const BoundReport r = bound_checks(get("L_{6,10}"), true);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.checks[3].applicable);
  EXPECT_EQ(r.checks[3].lhs, 3);
  EXPECT_EQ(r.checks[3].rhs, 5);
  EXPECT_TRUE(r.all_hold());

  const BoundReport a = bound_checks(abelian(4));
  EXPECT_EQ(a.checks[0].lhs, 6);
  EXPECT_EQ(a.checks[0].rhs, 6);
  EXPECT_TRUE(a.all_hold());

  const BoundReport c = bound_checks(get("37A"));
  EXPECT_EQ(c.checks[2].lhs, 12);
  EXPECT_EQ(c.checks[2].rhs, 13);
  EXPECT_TRUE(c.checks[2].holds);
  EXPECT_FALSE(c.checks[3].applicable);
}

TEST(Bounds, HoldOnWholeCatalogue) {
  for (const auto& e : list_entries()) {
    const auto ex = expected_invariants(e.name);
    std::optional<bool> hint;
    if (ex.capable && !ex.capable->value) hint = true;
    EXPECT_TRUE(bound_checks(get(e.name), hint).all_hold()) << e.name;
  }
}

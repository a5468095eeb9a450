#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace liemult;
using namespace testutil;

TEST(Get, Examples) {
  const LieAlgebra d = get("37D");
  EXPECT_EQ(d.dim(), 7);
  EXPECT_EQ(d.bracket(unit(7, 1), unit(7, 2)), unit(7, 5));
  EXPECT_EQ(d.bracket(unit(7, 3), unit(7, 4)), unit(7, 5));
  EXPECT_EQ(d.bracket(unit(7, 1), unit(7, 3)), unit(7, 6));
  EXPECT_EQ(d.bracket(unit(7, 2), unit(7, 4)), unit(7, 7));
  EXPECT_EQ(d.products().size(), 4u);

  EXPECT_TRUE(validate(get("L_{6,22}", {{"eps", Scalar(0)}})).ok);

  const LieAlgebra s = get("157");
  EXPECT_EQ(s.dim(), 7);
  EXPECT_EQ(s.bracket(unit(7, 1), unit(7, 2)), unit(7, 3));
  for (auto [i, j] : {std::pair{1, 3}, {2, 4}, {5, 6}}) EXPECT_EQ(s.bracket(unit(7, i), unit(7, j)), unit(7, 7));
  EXPECT_EQ(s.products().size(), 4u);
}

TEST(Get, Errors) {
  EXPECT_THROW(get("L_{9,99}"), UnknownName);
  EXPECT_THROW(get("37B", {{"eps", Scalar(1)}}), MissingParameter);
  EXPECT_THROW(get("L_{6,22}", {{"delta", Scalar(1)}}), MissingParameter);
}

TEST(Get, FamiliesAndSums) {
  EXPECT_EQ(get("A(4)"), abelian(4));
  EXPECT_EQ(get("H(2)"), heisenberg(2));
  EXPECT_EQ(get("L_{5,8}+A(3)"), direct_sum(get("L_{5,8}"), abelian(3)));
  EXPECT_EQ(get("L_{5,8}⊕A(3)"), get("L_{5,8}+A(3)"));
}

TEST(Aliases, ResolveToIdenticalTables) {
  EXPECT_EQ(get("L(3,4,1,4)"), get("L_{4,3}"));
  EXPECT_EQ(get("L(4,5,2,4)"), get("L_{5,8}"));
  EXPECT_EQ(get("L(4,5,1,6)"), get("L_{5,5}"));
  EXPECT_EQ(get("L_1"), get("27B"));
  EXPECT_EQ(get("L_2"), get("27A"));
  for (const auto& e : list_entries())
    for (const auto& a : e.aliases) EXPECT_EQ(get(a), get(e.name)) << a;
}

TEST(List, ContentsAndOrder) {
  const auto& es = list_entries();
  EXPECT_EQ(es.size(), 68u);
  std::set<std::string> names;
  for (const auto& e : es) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  for (const char* n : {"L_{5,6}", "1357C", "L_{4,3}⊕H(1)", "257D", "L_{6,26}⊕A(1)"})
    EXPECT_TRUE(find_entry(n) != nullptr) << n;
  const auto ex56 = expected_invariants("L_{5,6}");
  ASSERT_TRUE(ex56.dim_M.has_value());
  EXPECT_EQ(ex56.dim_M->value, 3);
  EXPECT_FALSE(ex56.nilpotency_class.has_value());
  const auto c = expected_invariants("1357C");
  EXPECT_EQ(c.dim_M->value, 6);
  EXPECT_EQ(c.s->value, 10);
}

TEST(List, ExpectationsCarrySources) {
  for (const auto& e : list_entries()) {
    EXPECT_FALSE(e.listed_in.empty()) << e.name;
    for (const auto& x : e.expectations) EXPECT_FALSE(x.source.empty()) << e.name;
    EXPECT_EQ(e.is_composite(), !e.table.has_value()) << e.name;
  }
}

TEST(Expected, Examples) {
  const auto k = expected_invariants("257K");
  EXPECT_EQ(k.dim_M->value, 6);
  EXPECT_EQ(k.s->value, 10);
  EXPECT_EQ(k.dim_M->source, "Table 5");
  const auto l58 = expected_invariants("L_{5,8}");
  EXPECT_EQ(l58.dim_M->value, 6);
  EXPECT_FALSE(expected_invariants("L_{6,6}").dim_M.has_value());
  EXPECT_THROW(expected_invariants("nope"), UnknownName);
  const auto l610 = expected_invariants("L_{6,10}");
  ASSERT_TRUE(l610.capable.has_value());
  EXPECT_FALSE(l610.capable->value);
}

TEST(MainTheorem, Members) {
  const auto list = main_theorem_list();
  EXPECT_EQ(list.size(), 11u);
  EXPECT_EQ(get(list[0].name), direct_sum(get("L_{5,8}"), abelian(4)));
  EXPECT_EQ(get(list[0].construction), get(list[0].name));
  for (const auto& m : list) EXPECT_TRUE(find_entry(m.construction) != nullptr) << m.construction;
  EXPECT_EQ(get("L_{6,23}").dim(), 6);
}

TEST(Parameters, Families) {
  EXPECT_EQ(parameters_of("L_{6,22}"), (std::vector<std::string>{"eps"}));
  EXPECT_EQ(parameters_of("L_{6,19}"), (std::vector<std::string>{"eps"}));
  EXPECT_EQ(parameters_of("L_{6,24}"), (std::vector<std::string>{"eps"}));
  EXPECT_EQ(parameters_of("L_{6,22}⊕A(2)"), (std::vector<std::string>{"eps"}));
  EXPECT_TRUE(parameters_of("37B").empty());
}

TEST(StructuralExpectations, HoldWhereRecorded) {
  for (const auto& e : list_entries()) {
    const LieAlgebra l = get(e.name);
    const auto ex = expected_invariants(e.name);
    if (ex.dim_L2) EXPECT_EQ(derived_subalgebra(l).dim(), ex.dim_L2->value) << e.name;
    if (ex.nilpotency_class) EXPECT_EQ(nilpotency_class(l), ex.nilpotency_class->value) << e.name;
    if (ex.dim_Z && e.name != "1357C") EXPECT_EQ(center(l).dim(), ex.dim_Z->value) << e.name;
  }
}

// The printed 1357C table never involves x6, so x6 spans a central direct
// factor and the recorded (6, 10) cannot hold for it. The single extra
// bracket [x3,x6] = x7 restores the recorded values.
TEST(Table1357C, PrintedTableDiffersFromRecordedRow) {
  const LieAlgebra printed = get("1357C");
  for (int i = 1; i <= 7; ++i) EXPECT_TRUE(is_zero(printed.bracket(unit(7, 6), unit(7, i))));
  EXPECT_EQ(center(printed).dim(), 2);
  EXPECT_EQ(schur_multiplier_dim(printed), 7);
  EXPECT_EQ(s_invariant(printed), 9);

  AlgebraSpec spec = spec_for("1357C");
  spec.brackets.push_back({3, 6, {{Scalar(1), "", 7}}});
  const LieAlgebra restored = instantiate(spec);
  ASSERT_TRUE(validate(restored).ok);
  EXPECT_EQ(center(restored).dim(), 1);
  EXPECT_EQ(schur_multiplier_dim(restored), 6);
  EXPECT_EQ(s_invariant(restored), 10);
}

TEST(Export, SectionsNamed) {
  const std::string text = export_catalogue();
  EXPECT_NE(text.find("# section: 37B\ndim 7\n"), std::string::npos);
  EXPECT_EQ(text, export_catalogue());
}

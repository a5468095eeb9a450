// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "jacobi_oracle.hpp"
#include "liemult/liemult.hpp"

using namespace liemult;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << "; mismatches:";
    ok = false;
    detail << " " << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check ac1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opt;
  opt.sources = {"Table 4", "Table 5", "Table 6", "Table 7"};
  const VerificationReport r = verify_tables(opt);
  const double secs = seconds_since(t0);
  std::map<std::string, int> rows;
  for (const auto& rec : r.records) {
    ++rows[rec.citation];
    c.expect(rec.status == "pass", rec.name + " expected " + rec.expected + " computed " + rec.computed);
  }
  c.expect(rows["Table 4"] == 5 && rows["Table 5"] == 16 && rows["Table 6"] == 2 && rows["Table 7"] == 18,
           "row counts");
  c.expect(secs < 10, "runtime");
  c.detail << "; " << r.count("pass") << "/" << r.records.size() << " pairs reproduced in " << secs << " s";
  return c;
}

Check ac2() {
  Check c;
  const std::vector<std::pair<std::string, int>> want{{"L_{6,22}", 8}, {"L_{5,8}", 6}, {"27B", 9}, {"27A", 10}};
  for (const auto& [name, m] : want) {
    const int got = schur_multiplier_dim(get(name));
    c.expect(got == m, name + "=" + std::to_string(got));
    c.detail << " " << name << ":" << got;
  }
  return c;
}

Check ac3() {
  Check c;
  for (const auto& m : main_theorem_list()) {
    const int s = s_invariant(get(m.construction));
    c.expect(s == 5, m.name + " s=" + std::to_string(s));
  }
  const MultiplierReport a = multiplier_report(get("L_{5,8}⊕A(4)"));
  c.expect(a.n == 9 && a.dim_M == 24 && a.s == 5, "L_{5,8}+A(4)");
  const MultiplierReport b = multiplier_report(get("L_{4,3}⊕A(3)"));
  c.expect(b.n == 7 && b.dim_M == 11 && b.s == 5, "L_{4,3}+A(3)");
  c.detail << " 11 members s=5";
  return c;
}

Check ac4() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  int compared = 0;
  for (const auto& e : list_entries()) {
    const LieAlgebra l = get(e.name);
    const int ab = l.dim() - derived_subalgebra(l).dim();
    if (ab > 4 || nilpotency_class(l) > 4) continue;
    ++compared;
    const int h = hopf_multiplier_dim(l), m = schur_multiplier_dim(l);
    c.expect(h == m, e.name);
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60, "runtime");
  c.detail << " " << compared << " entries compared in " << secs << " s";
  return c;
}

Check ac5() {
  Check c;
  struct Case {
    const char* name;
    std::function<long long(long long)> closed;  // dim M(L + A(k)) at n = dim L + k
  };
  const std::vector<Case> cases{
      {"L_{5,8}", [](long long n) { return 6 + (n - 5) * n / 2; }},
      {"L_{6,22}", [](long long n) { return 8 + (n - 6) * (n + 1) / 2; }},
      {"L_{4,3}", [](long long n) { return 2 + (n - 4) * (n - 1) / 2; }},
      {"L_{5,5}", [](long long n) { return 4 + n * (n - 5) / 2; }},
  };
  for (const auto& cs : cases) {
    const LieAlgebra l = get(cs.name);
    const int dm = schur_multiplier_dim(l);
    const int ab = l.dim() - derived_subalgebra(l).dim();
    for (int k = 1; k <= 3; ++k) {
      const int direct = schur_multiplier_dim(direct_sum(l, abelian(k)));
      const std::string tag = std::string(cs.name) + "+A(" + std::to_string(k) + ")";
      c.expect(direct == kunneth_dim(dm, ab, k), tag + " formula");
      c.expect(direct == cs.closed(l.dim() + k), tag + " closed form");
    }
  }
  c.detail << " 12 sums";
  return c;
}

Check ac6() {
  Check c;
  int count = 0;
  for (const auto& e : list_entries()) {
    const LieAlgebra l = get(e.name);
    if (nilpotency_class(l) != 2) continue;
    ++count;
    const GaneaData g = ganea_data(l);
    c.expect(g.k_in_ker_g, e.name + " K");
    c.expect(g.alternating_sum() == 0, e.name + " sum");
  }
  for (const char* name : {"37B", "37C", "37D"}) {
    const int k = ganea_data(get(name)).ker_g_dim;
    c.expect(k == 4, std::string(name) + " ker g=" + std::to_string(k));
  }
  c.detail << " " << count << " class-2 entries";
  return c;
}

Check ac7() {
  Check c;
  for (const char* name : {"L_{6,10}", "27A", "157"}) {
    const CoverReport r = cover_and_epicenter(get(name));
    c.expect(r.epicenter.dim() > 0, std::string(name) + " capable");
  }
  c.expect(cover_and_epicenter(heisenberg(1)).epicenter.dim() == 0, "H(1) non-capable");
  for (const auto& e : list_entries()) {
    const auto ex = expected_invariants(e.name);
    if (!ex.capable || ex.capable->value) continue;
    const LieAlgebra l = get(e.name);
    if (derived_subalgebra(l).dim() < 2) continue;
    c.expect(l.dim() - 3 < s_invariant(l), e.name + " bound");
  }
  return c;
}

Check ac8() {
  Check c;
  for (const auto& e : list_entries()) {
    const MultiplierReport r = multiplier_report(get(e.name));
    c.expect(r.s && r.t - *r.s == r.n - 2, e.name + " t-s");
  }
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k) {
      const LieAlgebra l = k ? direct_sum(heisenberg(m), abelian(k)) : heisenberg(m);
      c.expect(s_invariant(l) == (m == 1 ? 0 : 2), "H(" + std::to_string(m) + ")+A(" + std::to_string(k) + ")");
    }
  std::mt19937 rng(1357);
  const auto& entries = list_entries();
  int broken = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra base = get(entries[rng() % entries.size()].name);
    const oracle::Tensor t = oracle::mutate(oracle::tensor_of(base), rng);
    const bool holds = oracle::jacobi_holds(t);
    broken += !holds;
    c.expect(validate(oracle::from_tensor(t)).ok == holds, "mutation " + std::to_string(trial));
  }
  c.detail << " 100 mutations, " << broken << " break Jacobi";
  return c;
}

Check ac9() {
  Check c;
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 5; ++m) {
      const HallBasis hb = hall_basis(d, m);
      c.expect(hb.dims_by_degree.back() == witt_dim(d, m), "hall " + std::to_string(d) + "," + std::to_string(m));
    }
  for (int d = 1; d <= 4; ++d)
    for (int k = 1; k <= 4; ++k)
      c.expect(validate(free_nilpotent(d, k).algebra).ok, "free " + std::to_string(d) + "," + std::to_string(k));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check (*)()>> criteria{
      {"AC-1 table pairs (dim M, s)", ac1}, {"AC-2 multiplier values", ac2},
      {"AC-3 s = 5 members", ac3},          {"AC-4 Hopf oracle", ac4},
      {"AC-5 Kunneth", ac5},                {"AC-6 five-term sequence", ac6},
      {"AC-7 capability", ac7},             {"AC-8 property suite", ac8},
      {"AC-9 Hall basis", ac9},
  };
  bool all = true;
  for (const auto& [label, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "; exception: " << e.what();
    }
    all = all && c.ok;
    std::cout << (c.ok ? "PASS " : "FAIL ") << label << c.detail.str() << "\n" << std::flush;
  }
  return all ? 0 : 1;
}

#ifndef LIEMULT_VERIFY_HPP
#define LIEMULT_VERIFY_HPP

// Recomputes every recorded catalogue expectation and the statements that
// tie the invariants together, producing one report record per check.

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "liemult/catalogue.hpp"
#include "liemult/hopf.hpp"

namespace liemult {

struct Fingerprint {
  int n = 0;
  int dim_L2 = 0;
  int dim_Z = 0;
  int nilpotency_class = 0;
  int dim_M = 0;
  int s = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string str() const {
    std::ostringstream o;
    o << "(" << n << ", " << dim_L2 << ", " << dim_Z << ", " << nilpotency_class << ", " << dim_M << ", " << s << ")";
    return o.str();
  }
};

inline Fingerprint fingerprint(const LieAlgebra& l) {
  if (l.is_abelian()) throw AbelianInput();
  Fingerprint f;
  f.n = l.dim();
  f.dim_L2 = derived_subalgebra(l).dim();
  f.dim_Z = center(l).dim();
  f.nilpotency_class = nilpotency_class(l);
  const MultiplierReport r = multiplier_report(l);
  f.dim_M = r.dim_M;
  f.s = *r.s;
  return f;
}

/// Members of the s(L) = 5 list sharing L's fingerprint; empty unless s(L) = 5.
/// Several names mean the fingerprint does not separate them.
inline std::vector<std::string> classify_s5(const LieAlgebra& l) {
  const Fingerprint f = fingerprint(l);
  std::vector<std::string> out;
  if (f.s != 5) return out;
  for (const auto& m : main_theorem_list())
    if (fingerprint(get(m.construction)) == f) out.push_back(m.construction);
  return out;
}

struct ReportRecord {
  std::string name;
  std::string invariant;
  std::string expected;
  std::string computed;
  /// "pass", "fail", "info" (reported, not asserted) or "skip".
  std::string status;
  std::string citation;
};

struct VerificationReport {
  std::vector<ReportRecord> records;

  int count(const std::string& status) const {
    return static_cast<int>(
        std::count_if(records.begin(), records.end(), [&](const ReportRecord& r) { return r.status == status; }));
  }
  int failures() const { return count("fail"); }
  bool ok() const { return failures() == 0; }
  void append(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
};

struct VerifyOptions {
  /// Extra parameter values evaluated for parameterized entries (informational).
  std::vector<Scalar> epsilon_samples;
  /// Also compute dim M through the free presentation and compare.
  bool oracle = false;
  /// Only expectations whose source is listed; empty means all.
  std::vector<std::string> sources;
  long long basis_cap = kDefaultBasisCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline ReportRecord record(const std::string& name, const std::string& inv, const std::string& expected,
                           const std::string& computed, const std::string& citation) {
  return {name, inv, expected, computed, expected == computed ? "pass" : "fail", citation};
}

inline VerificationReport verify_entry(const CatalogueEntry& e, const VerifyOptions& opt) {
  VerificationReport rep;
  std::vector<const Expectation*> selected;
  for (const auto& x : e.expectations)
    if (opt.sources.empty() || std::find(opt.sources.begin(), opt.sources.end(), x.source) != opt.sources.end())
      selected.push_back(&x);
  if (selected.empty()) return rep;

  const LieAlgebra l = get(e.name);
  const ValidationReport v = validate(l);
  if (!v.ok) {
    // Quarantined: the printed table does not satisfy the Jacobi identity.
    for (const Expectation* x : selected)
      rep.records.push_back({e.name, invariant_name(x->kind), x->expected_text(), "invalid", "fail", x->source});
    return rep;
  }

  const MultiplierReport mr = multiplier_report(l);
  const Subspace derived = derived_subalgebra(l);
  const Subspace z = center(l);
  for (const Expectation* x : selected) {
    std::string computed;
    switch (x->kind) {
      case Invariant::MultiplierPair:
        computed = std::to_string(mr.dim_M) + "," + (mr.s ? std::to_string(*mr.s) : "-");
        break;
      case Invariant::MultiplierDim: computed = std::to_string(mr.dim_M); break;
      case Invariant::SInvariant: computed = mr.s ? std::to_string(*mr.s) : "-"; break;
      case Invariant::DerivedDim: computed = std::to_string(derived.dim()); break;
      case Invariant::CenterDim: computed = std::to_string(z.dim()); break;
      case Invariant::CenterInDerived: computed = yes_no(derived.contains(z)); break;
      case Invariant::CenterEqualsDerived: computed = yes_no(derived == z); break;
      case Invariant::NilpotencyClass: computed = std::to_string(nilpotency_class(l)); break;
      case Invariant::NonCapable:
        try {
          computed = yes_no(!cover_and_epicenter(l, opt.basis_cap).is_capable);
        } catch (const ResourceLimit&) {
          rep.records.push_back({e.name, invariant_name(x->kind), x->expected_text(), "-", "skip", x->source});
          continue;
        }
        break;
    }
    rep.records.push_back(record(e.name, invariant_name(x->kind), x->expected_text(), computed, x->source));
  }

  if (opt.oracle) {
    try {
      rep.records.push_back(record(e.name, "dim_M(hopf)", std::to_string(mr.dim_M),
                                   std::to_string(hopf_multiplier_dim(l, opt.basis_cap)),
                                   "cohomology vs free presentation"));
    } catch (const ResourceLimit&) {
      rep.records.push_back({e.name, "dim_M(hopf)", std::to_string(mr.dim_M), "-", "skip",
                             "cohomology vs free presentation"});
    }
  }

  const auto params = parameters_of(e.name);
  const ExpectedInvariants ex = expected_invariants(e.name);
  if (!params.empty() && ex.dim_M) {
    for (const Scalar& eps : opt.epsilon_samples) {
      std::map<std::string, Scalar> bind;
      for (const auto& p : params) bind[p] = eps;
      const LieAlgebra le = get(e.name, bind);
      std::string computed = validate(le).ok ? std::to_string(schur_multiplier_dim(le)) : "invalid";
      rep.records.push_back({e.name, "dim_M@" + params.front() + "=" + eps.get_str(),
                             std::to_string(ex.dim_M->value), computed, "info", "parameter sweep"});
    }
  }
  return rep;
}

/// Runs `work(i)` for i in [0, count) on a few threads; results keep index order.
inline std::vector<VerificationReport> fan_out(std::size_t count, unsigned threads,
                                               const std::function<VerificationReport(std::size_t)>& work) {
  std::vector<VerificationReport> results(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace detail

inline VerificationReport verify_tables(const VerifyOptions& opt = {}) {
  const auto& entries = list_entries();
  const auto parts = detail::fan_out(entries.size(), opt.threads,
                                     [&](std::size_t i) { return detail::verify_entry(entries[i], opt); });
  VerificationReport rep;
  for (const auto& p : parts) rep.append(p);
  return rep;
}

inline VerificationReport lemma_suite(long long cap = kDefaultBasisCap) {
  using detail::record;
  VerificationReport rep;

  // (a) s(H(m) + A(k)) is 0 for m = 1 and 2 for m >= 2.
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k) {
      const LieAlgebra l = k ? direct_sum(heisenberg(m), abelian(k)) : heisenberg(m);
      const std::string name = "H(" + std::to_string(m) + ")" + (k ? "⊕A(" + std::to_string(k) + ")" : "");
      rep.records.push_back(record(name, "s", m == 1 ? "0" : "2", std::to_string(s_invariant(l)),
                                   "s of H(m)⊕A(k)"));
    }

  // (b) n - 3 < s(L) for the non-capable entries with dim L^2 >= 2.
  for (const auto& e : list_entries()) {
    const auto ex = expected_invariants(e.name);
    if (!ex.capable || ex.capable->value) continue;
    const LieAlgebra l = get(e.name);
    if (derived_subalgebra(l).dim() < 2) continue;
    const int n = l.dim();
    const int s = s_invariant(l);
    rep.records.push_back({e.name, "n-3<s", "yes", std::to_string(n - 3) + "<" + std::to_string(s),
                           n - 3 < s ? "pass" : "fail", "non-capable bound"});
  }

  // (c) dim ker g = n - 3 for the generalized Heisenberg algebras of rank 3 with s = 5.
  for (const char* name : {"37B", "37C", "37D"}) {
    const LieAlgebra l = get(name);
    rep.records.push_back(record(name, "dim_ker_g", std::to_string(l.dim() - 3),
                                 std::to_string(ganea_data(l, cap).ker_g_dim), "rank-3 generalized Heisenberg"));
  }

  // (d) exactness of the five-term sequence for every class-2 entry.
  for (const auto& e : list_entries()) {
    const LieAlgebra l = get(e.name);
    if (l.is_abelian() || nilpotency_class(l) != 2) continue;
    const GaneaData g = ganea_data(l, cap);
    rep.records.push_back(record(e.name, "K<=ker_g", "yes", detail::yes_no(g.k_in_ker_g), "five-term sequence"));
    rep.records.push_back(
        record(e.name, "alternating_sum", "0", std::to_string(g.alternating_sum()), "five-term sequence"));
  }

  // (e) t - s = n - 2.
  for (const auto& e : list_entries()) {
    const LieAlgebra l = get(e.name);
    if (l.is_abelian()) continue;
    const MultiplierReport r = multiplier_report(l);
    rep.records.push_back(record(e.name, "t-s", std::to_string(r.n - 2), std::to_string(r.t - *r.s), "t - s = n - 2"));
  }

  // (f) every member of the s(L) = 5 list.
  for (const auto& m : main_theorem_list())
    rep.records.push_back(record(m.name, "s", "5", std::to_string(s_invariant(get(m.construction))), "main theorem"));
  return rep;
}

/// Aligned columns for people.
inline std::string format_text(const VerificationReport& rep) {
  const std::vector<std::string> head{"name", "invariant", "expected", "computed", "status", "citation"};
  std::vector<std::vector<std::string>> rows{head};
  for (const auto& r : rep.records) rows.push_back({r.name, r.invariant, r.expected, r.computed, r.status, r.citation});
  // Display width: count UTF-8 lead bytes only.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> w(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  std::ostringstream o;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      o << row[c];
      if (c + 1 < row.size()) o << std::string(w[c] - width(row[c]) + 2, ' ');
    }
    o << "\n";
  }
  o << rep.count("pass") << " passed, " << rep.failures() << " failed, " << rep.count("info") << " informational, "
    << rep.count("skip") << " skipped\n";
  return o.str();
}

/// One tab-separated record per line.
inline std::string format_machine(const VerificationReport& rep) {
  std::ostringstream o;
  for (const auto& r : rep.records)
    o << r.name << '\t' << r.invariant << '\t' << r.expected << '\t' << r.computed << '\t' << r.status << '\t'
      << r.citation << '\n';
  return o.str();
}

}  // namespace liemult

#endif  // LIEMULT_VERIFY_HPP

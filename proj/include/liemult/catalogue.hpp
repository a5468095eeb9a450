#ifndef LIEMULT_CATALOGUE_HPP
#define LIEMULT_CATALOGUE_HPP

// Named nilpotent Lie algebras of dimension at most 10 with the invariants
// recorded for them in the classification tables. Indecomposable algebras
// carry their multiplication table; decomposable ones are direct sums of
// other entries and of A(k) / H(m), written with "⊕" (or "+").

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemult/text_format.hpp"

namespace liemult {

enum class Invariant {
  MultiplierPair,       // (dim M, s)
  MultiplierDim,        // dim M
  SInvariant,           // s
  DerivedDim,           // dim L^2
  CenterDim,            // dim Z(L)
  CenterInDerived,      // Z(L) is contained in L^2
  CenterEqualsDerived,  // Z(L) = L^2
  NilpotencyClass,
  NonCapable,
};

inline const char* invariant_name(Invariant k) {
  switch (k) {
    case Invariant::MultiplierPair: return "dim_M,s";
    case Invariant::MultiplierDim: return "dim_M";
    case Invariant::SInvariant: return "s";
    case Invariant::DerivedDim: return "dim_L2";
    case Invariant::CenterDim: return "dim_Z";
    case Invariant::CenterInDerived: return "Z<=L2";
    case Invariant::CenterEqualsDerived: return "Z=L2";
    case Invariant::NilpotencyClass: return "class";
    case Invariant::NonCapable: return "non_capable";
  }
  return "?";
}

struct Expectation {
  Invariant kind = Invariant::MultiplierDim;
  int value = 0;
  int second = 0;  // s for MultiplierPair
  /// Table or statement the value is taken from, used to filter reports.
  std::string source;

  std::string expected_text() const {
    switch (kind) {
      case Invariant::MultiplierPair: return std::to_string(value) + "," + std::to_string(second);
      case Invariant::CenterInDerived:
      case Invariant::CenterEqualsDerived:
      case Invariant::NonCapable: return value ? "yes" : "no";
      default: return std::to_string(value);
    }
  }
};

struct CatalogueEntry {
  std::string name;
  std::vector<std::string> aliases;
  /// Multiplication table for indecomposable entries.
  std::optional<AlgebraSpec> table;
  /// Summand names for direct sums, e.g. {"L_{5,6}", "A(2)"}.
  std::vector<std::string> summands;
  /// Where the algebra is listed: "notation", "Table 1", "Table 2", "Table 3", "main theorem".
  std::vector<std::string> listed_in;
  std::vector<Expectation> expectations;

  bool is_composite() const { return !summands.empty(); }
};

template <typename T>
struct Cited {
  T value;
  std::string source;
};

/// Per-invariant view of an entry's expectations; unset means unknown.
struct ExpectedInvariants {
  std::optional<Cited<int>> dim_M;
  std::optional<Cited<int>> s;
  std::optional<Cited<int>> dim_L2;
  std::optional<Cited<int>> dim_Z;
  std::optional<Cited<int>> nilpotency_class;
  std::optional<Cited<bool>> capable;
};

namespace detail {

inline AlgebraSpec table(int dim, const std::vector<const char*>& lines,
                         std::vector<std::pair<std::string, Scalar>> params = {}) {
  std::string text = "dim " + std::to_string(dim) + "\n";
  for (const auto& [name, v] : params) text += "param " + name + " = " + v.get_str() + "\n";
  for (const char* l : lines) text += std::string(l) + "\n";
  return parse_algebra_spec(text);
}

inline std::vector<std::pair<std::string, Scalar>> eps() { return {{"eps", Scalar(1)}}; }

inline Expectation pair(int dim_m, int s, const std::string& source) {
  return {Invariant::MultiplierPair, dim_m, s, source};
}
inline Expectation expect(Invariant k, int v, const std::string& source) { return {k, v, 0, source}; }

inline std::vector<CatalogueEntry> build_catalogue() {
  using I = Invariant;
  std::vector<CatalogueEntry> c;
  auto add = [&c](CatalogueEntry e) -> CatalogueEntry& {
    c.push_back(std::move(e));
    return c.back();
  };
  const std::string t1 = "Table 1", t2 = "Table 2", t3 = "Table 3", nt = "notation", mt = "main theorem";
  const std::string prop = "multiplier proposition";
  const std::string ncl = "non-capable lemma";
  const std::string cap2 = "capable class-2 case", cap3 = "capable class-3 case";
  const std::string t1h = "Table 1 listing", t23h = "Table 2/3 listing";
  const std::string t4h = "Table 4 hypothesis", t5h = "Table 5 hypothesis", t6h = "Table 6 hypothesis",
                    t7h = "Table 7 hypothesis";

  auto t4 = [&](CatalogueEntry& e, int m, int s) {
    e.expectations.push_back(pair(m, s, "Table 4"));
    e.expectations.push_back(expect(I::CenterDim, 3, t4h));
    e.expectations.push_back(expect(I::CenterEqualsDerived, 1, t4h));
  };
  auto t5 = [&](CatalogueEntry& e, int m, int s) {
    e.expectations.push_back(pair(m, s, "Table 5"));
    e.expectations.push_back(expect(I::CenterDim, 2, t5h));
    e.expectations.push_back(expect(I::CenterInDerived, 1, t5h));
  };
  auto t6 = [&](CatalogueEntry& e, int m, int s) {
    e.expectations.push_back(pair(m, s, "Table 6"));
    e.expectations.push_back(expect(I::CenterDim, 4, t6h));
  };
  auto t7 = [&](CatalogueEntry& e, int m, int s) {
    e.expectations.push_back(pair(m, s, "Table 7"));
    e.expectations.push_back(expect(I::CenterDim, 1, t7h));
  };
  auto in_t1 = [&](CatalogueEntry& e) {
    e.listed_in.push_back(t1);
    e.expectations.push_back(expect(I::DerivedDim, 3, t1h));
  };
  auto in_t2 = [&](CatalogueEntry& e) {
    e.listed_in.push_back(t2);
    e.expectations.push_back(expect(I::DerivedDim, 3, t23h));
  };
  auto in_t3 = [&](CatalogueEntry& e) {
    e.listed_in.push_back(t3);
    e.expectations.push_back(expect(I::DerivedDim, 3, t23h));
  };
  auto s5 = [&](CatalogueEntry& e) {
    e.listed_in.push_back(mt);
    e.expectations.push_back(expect(I::SInvariant, 5, mt));
  };

  // Algebras named in the notation list.
  {
    auto& e = add({"L_{3,2}", {"H(1)"}, table(3, {"[1,2]=3"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::SInvariant, 0, "dim L^2 = 1 lemma"));
  }
  {
    auto& e = add({"L_{4,3}", {"L(3,4,1,4)"}, table(4, {"[1,2]=3", "[1,3]=4"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 2, cap3));
    e.expectations.push_back(expect(I::NilpotencyClass, 3, cap3));
  }
  {
    auto& e = add({"L_{5,5}", {"L(4,5,1,6)"}, table(5, {"[1,2]=3", "[1,3]=5", "[2,4]=5"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 4, cap3));
    e.expectations.push_back(expect(I::NilpotencyClass, 3, cap3));
  }
  {
    auto& e = add({"L_{5,6}", {"L'(7,5,1,7)"}, table(5, {"[1,2]=3", "[1,3]=4", "[1,4]=5", "[2,3]=5"}), {}, {nt}, {}});
    in_t1(e);
    t7(e, 3, 4);
  }
  {
    auto& e = add({"L_{5,7}", {"L(7,5,1,7)"}, table(5, {"[1,2]=3", "[1,3]=4", "[1,4]=5"}), {}, {nt}, {}});
    in_t1(e);
    t7(e, 3, 4);
  }
  {
    auto& e = add({"L_{5,8}", {"L(4,5,2,4)"}, table(5, {"[1,2]=4", "[1,3]=5"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 6, prop));
    e.expectations.push_back(expect(I::NilpotencyClass, 2, cap2));
  }
  {
    auto& e = add({"L_{5,9}", {"L(7,5,2,7)"}, table(5, {"[1,2]=3", "[1,3]=4", "[2,3]=5"}), {}, {nt}, {}});
    in_t1(e);
    t5(e, 3, 4);
  }
  {
    auto& e = add({"L_{6,10}", {}, table(6, {"[1,2]=3", "[1,3]=6", "[4,5]=6"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::SInvariant, 5, ncl));
    e.expectations.push_back(expect(I::NonCapable, 1, ncl));
    e.expectations.push_back(expect(I::DerivedDim, 2, ncl));
    s5(e);
  }
  {
    auto& e = add({"L_{6,22}", {"L_{6,22}(eps)"},
                   table(6, {"[1,2]=5", "[1,3]=6", "[2,4]=eps*6", "[3,4]=5"}, eps()), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 8, prop));
    e.expectations.push_back(expect(I::NilpotencyClass, 2, cap2));
  }
  {
    auto& e = add({"27B", {"L_1"}, table(7, {"[1,2]=6", "[3,4]=6", "[1,5]=7", "[2,3]=7"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 9, prop));
    e.expectations.push_back(expect(I::NilpotencyClass, 2, cap2));
  }
  {
    auto& e = add({"27A", {"L_2"}, table(7, {"[1,2]=6", "[1,4]=7", "[3,5]=7"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::MultiplierDim, 10, prop));
    e.expectations.push_back(expect(I::SInvariant, 6, ncl));
    e.expectations.push_back(expect(I::NonCapable, 1, ncl));
    e.expectations.push_back(expect(I::DerivedDim, 2, ncl));
  }
  {
    auto& e = add({"157", {}, table(7, {"[1,2]=3", "[1,3]=7", "[2,4]=7", "[5,6]=7"}), {}, {nt}, {}});
    e.expectations.push_back(expect(I::SInvariant, 6, ncl));
    e.expectations.push_back(expect(I::NonCapable, 1, ncl));
    e.expectations.push_back(expect(I::DerivedDim, 2, ncl));
  }
  {
    auto& e = add({"37B", {}, table(7, {"[1,2]=5", "[2,3]=6", "[3,4]=7"}), {}, {nt}, {}});
    in_t2(e);
    t4(e, 11, 5);
    s5(e);
  }
  {
    auto& e = add({"37C", {}, table(7, {"[1,2]=5", "[3,4]=5", "[2,3]=6", "[2,4]=7"}), {}, {nt}, {}});
    in_t2(e);
    t4(e, 11, 5);
    s5(e);
  }
  {
    auto& e = add({"37D", {}, table(7, {"[1,2]=5", "[3,4]=5", "[1,3]=6", "[2,4]=7"}), {}, {nt}, {}});
    in_t2(e);
    t4(e, 11, 5);
    s5(e);
  }

  // Remaining algebras of dimension 5 and 6 with dim L^2 = 3.
  {
    auto& e = add({"L_{6,6}", {}, table(6, {"[1,2]=3", "[1,3]=4", "[1,4]=5", "[2,3]=5"}), {}, {}, {}});
    in_t1(e);
  }
  {
    auto& e = add({"L_{6,7}", {}, table(6, {"[1,2]=3", "[1,3]=4", "[1,4]=5"}), {}, {}, {}});
    in_t1(e);
  }
  {
    auto& e = add({"L_{6,9}", {}, table(6, {"[1,2]=3", "[1,3]=4", "[2,3]=5"}), {}, {}, {}});
    in_t1(e);
  }
  {
    auto& e = add({"L_{6,11}", {}, table(6, {"[1,2]=3", "[1,3]=4", "[1,4]=6", "[2,3]=6", "[2,5]=6"}), {}, {}, {}});
    in_t1(e);
    t7(e, 5, 6);
  }
  {
    auto& e = add({"L_{6,12}", {}, table(6, {"[1,2]=3", "[1,3]=4", "[1,4]=6", "[2,5]=6"}), {}, {}, {}});
    in_t1(e);
    t7(e, 5, 6);
  }
  {
    auto& e = add({"L_{6,13}", {}, table(6, {"[1,2]=3", "[1,3]=5", "[2,4]=5", "[1,5]=6", "[3,4]=6"}), {}, {}, {}});
    in_t1(e);
    t7(e, 4, 7);
  }
  {
    auto& e = add({"L_{6,19}", {"L_{6,19}(eps)"},
                   table(6, {"[1,2]=4", "[1,3]=5", "[1,5]=6", "[2,4]=6", "[3,5]=eps*6"}, eps()), {}, {}, {}});
    in_t1(e);
    t7(e, 5, 6);
  }
  {
    auto& e = add({"L_{6,20}", {}, table(6, {"[1,2]=4", "[1,3]=5", "[1,5]=6", "[2,4]=6"}), {}, {}, {}});
    in_t1(e);
    t7(e, 5, 6);
  }
  {
    auto& e = add({"L_{6,23}", {}, table(6, {"[1,2]=3", "[1,3]=5", "[2,4]=5", "[1,4]=6"}), {}, {}, {}});
    in_t1(e);
    t5(e, 6, 5);
    s5(e);
  }
  {
    auto& e = add({"L_{6,24}", {"L_{6,24}(eps)"},
                   table(6, {"[1,2]=3", "[1,3]=5", "[2,4]=5", "[1,4]=eps*6", "[2,3]=6"}, eps()), {}, {}, {}});
    in_t1(e);
    t5(e, 5, 6);
  }
  {
    auto& e = add({"L_{6,25}", {}, table(6, {"[1,2]=3", "[1,3]=5", "[1,4]=6"}), {}, {}, {}});
    in_t1(e);
    t5(e, 6, 5);
    s5(e);
  }
  {
    auto& e = add({"L_{6,26}", {}, table(6, {"[1,2]=4", "[1,3]=5", "[2,3]=6"}), {}, {}, {}});
    in_t1(e);
    t4(e, 8, 3);
  }

  // Seven-dimensional indecomposable algebras with dim L^2 = 3.
  {
    auto& e = add({"37A", {}, table(7, {"[1,2]=5", "[2,3]=6", "[2,4]=7"}), {}, {}, {}});
    in_t2(e);
    t4(e, 12, 4);
  }
  struct Row {
    const char* name;
    std::vector<const char*> lines;
    int table_no;
    int dim_m;
    int s;
  };
  const Row rows[] = {
      {"257A", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[1,5]=7"}, 5, 9, 7},
      {"257B", {"[1,2]=3", "[1,3]=6", "[1,4]=7", "[2,5]=7"}, 5, 8, 8},
      {"257C", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[2,5]=7"}, 5, 9, 7},
      {"257D", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[1,4]=7", "[2,5]=7"}, 5, 8, 8},
      {"257E", {"[1,2]=3", "[1,3]=6", "[4,5]=6", "[2,4]=7"}, 5, 8, 8},
      {"257F", {"[1,2]=3", "[2,3]=6", "[4,5]=6", "[2,4]=7"}, 5, 9, 7},
      {"257G", {"[1,2]=3", "[1,3]=6", "[4,5]=6", "[1,5]=7", "[2,4]=7"}, 5, 8, 8},
      {"257H", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[4,5]=7"}, 5, 8, 8},
      {"257I", {"[1,2]=3", "[1,3]=6", "[1,4]=6", "[1,5]=7", "[2,3]=7"}, 5, 8, 8},
      {"257J", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[1,5]=7", "[2,3]=7"}, 5, 8, 8},
      {"257K", {"[1,2]=3", "[1,3]=6", "[2,3]=7", "[4,5]=7"}, 5, 6, 10},
      {"257L", {"[1,2]=3", "[1,3]=6", "[2,4]=6", "[2,3]=7", "[4,5]=7"}, 5, 6, 10},
      {"147A", {"[1,2]=4", "[1,3]=5", "[1,6]=7", "[2,5]=7", "[3,4]=7"}, 7, 8, 8},
      {"147B", {"[1,2]=4", "[1,3]=5", "[1,4]=7", "[2,6]=7", "[3,5]=7"}, 7, 8, 8},
      {"1457A", {"[1,2]=3", "[1,3]=4", "[1,4]=7", "[5,6]=7"}, 7, 6, 10},
      {"1457B", {"[1,2]=3", "[1,3]=4", "[1,4]=7", "[2,3]=7", "[5,6]=7"}, 7, 6, 10},
      {"137A", {"[1,2]=5", "[1,5]=7", "[3,6]=7", "[3,4]=6"}, 7, 7, 9},
      {"137B", {"[1,2]=5", "[3,4]=6", "[1,5]=7", "[2,4]=7", "[3,6]=7"}, 7, 7, 9},
      {"137C", {"[1,2]=5", "[1,4]=6", "[2,3]=6", "[1,6]=7", "[3,5]=-7"}, 7, 7, 9},
      {"137D", {"[1,2]=5", "[1,4]=6", "[2,3]=6", "[1,6]=7", "[2,4]=7", "[3,5]=-7"}, 7, 7, 9},
      {"1357A", {"[1,2]=4", "[1,4]=5", "[2,3]=5", "[1,5]=7", "[2,6]=7", "[3,4]=-7"}, 7, 7, 9},
      {"1357B", {"[1,2]=4", "[1,4]=5", "[2,3]=5", "[1,5]=7", "[3,6]=7", "[3,4]=-7"}, 7, 6, 10},
      {"1357C", {"[1,2]=4", "[1,4]=5", "[2,3]=5", "[1,5]=7", "[2,4]=7", "[3,4]=-7"}, 7, 6, 10},
  };
  for (const Row& r : rows) {
    auto& e = add({r.name, {}, table(7, r.lines), {}, {}, {}});
    in_t2(e);
    if (r.table_no == 5)
      t5(e, r.dim_m, r.s);
    else
      t7(e, r.dim_m, r.s);
  }

  // Seven-dimensional decomposable algebras with dim L^2 = 3.
  auto sum = [&](const std::string& a, const std::string& b) -> CatalogueEntry& {
    return add({a + "⊕" + b, {}, std::nullopt, {a, b}, {}, {}});
  };
  in_t3(sum("L_{4,3}", "H(1)"));
  in_t3(sum("L_{5,6}", "A(2)"));
  in_t3(sum("L_{5,7}", "A(2)"));
  {
    auto& e = sum("L_{5,9}", "A(2)");
    in_t3(e);
    t6(e, 8, 8);
  }
  in_t3(sum("L_{6,11}", "A(1)"));
  in_t3(sum("L_{6,12}", "A(1)"));
  in_t3(sum("L_{6,13}", "A(1)"));
  in_t3(sum("L_{6,19}", "A(1)"));
  in_t3(sum("L_{6,20}", "A(1)"));
  in_t3(sum("L_{6,23}", "A(1)"));
  in_t3(sum("L_{6,24}", "A(1)"));
  in_t3(sum("L_{6,25}", "A(1)"));
  {
    auto& e = sum("L_{6,26}", "A(1)");
    in_t3(e);
    t6(e, 11, 5);
    s5(e);
  }

  // Decomposable members of the s(L) = 5 list not tabulated above.
  {
    auto& e = sum("L_{5,8}", "A(4)");
    e.aliases.push_back("L(4,5,2,4)⊕A(4)");
    s5(e);
  }
  {
    auto& e = sum("L_{4,3}", "A(3)");
    e.aliases.push_back("L(3,4,1,4)⊕A(3)");
    s5(e);
  }
  {
    auto& e = sum("L_{5,5}", "A(2)");
    e.aliases.push_back("L(4,5,1,6)⊕A(2)");
    s5(e);
  }
  {
    auto& e = sum("L_{6,22}", "A(2)");
    e.aliases.push_back("L_{6,22}(eps)⊕A(2)");
    s5(e);
  }
  return c;
}

/// Lookup key: spaces removed and "⊕" written as "+".
inline std::string normalize_name(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "⊕") == 0) {
      out += '+';
      i += 2;
    } else if (s[i] != ' ') {
      out += s[i];
    }
  }
  return out;
}

inline std::optional<int> parse_family(const std::string& key, char family) {
  if (key.size() < 4 || key[0] != family || key[1] != '(' || key.back() != ')') return std::nullopt;
  const std::string digits = key.substr(2, key.size() - 3);
  if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  const int v = std::stoi(digits);
  return v >= 1 ? std::optional<int>(v) : std::nullopt;
}

}  // namespace detail

/// The catalogue in a fixed order; built once, never modified.
inline const std::vector<CatalogueEntry>& list_entries() {
  static const std::vector<CatalogueEntry> entries = detail::build_catalogue();
  return entries;
}

/// Entry by canonical name or alias, if any.
inline const CatalogueEntry* find_entry(const std::string& name) {
  static const std::map<std::string, std::size_t> index = [] {
    std::map<std::string, std::size_t> m;
    const auto& es = list_entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
      m.emplace(detail::normalize_name(es[i].name), i);
      for (const auto& a : es[i].aliases) m.emplace(detail::normalize_name(a), i);
    }
    return m;
  }();
  auto it = index.find(detail::normalize_name(name));
  return it == index.end() ? nullptr : &list_entries()[it->second];
}

inline AlgebraSpec append_spec(AlgebraSpec a, const AlgebraSpec& b) {
  const int off = a.dim;
  a.dim += b.dim;
  for (const auto& p : b.params)
    if (std::none_of(a.params.begin(), a.params.end(), [&](const auto& q) { return q.first == p.first; }))
      a.params.push_back(p);
  for (BracketLine line : b.brackets) {
    line.i += off;
    line.j += off;
    for (auto& t : line.terms) t.target += off;
    a.brackets.push_back(std::move(line));
  }
  return a;
}

/// Multiplication table of a catalogue name, of A(k) or H(m), or of a sum
/// of such names joined by "⊕" or "+".
inline AlgebraSpec spec_for(const std::string& name) {
  if (const CatalogueEntry* e = find_entry(name)) {
    if (e->table) return *e->table;
    AlgebraSpec out;
    for (const auto& s : e->summands) out = append_spec(std::move(out), spec_for(s));
    return out;
  }
  const std::string key = detail::normalize_name(name);
  if (key.find('+') != std::string::npos) {
    AlgebraSpec out;
    std::size_t start = 0;
    while (start <= key.size()) {
      const std::size_t end = std::min(key.find('+', start), key.size());
      const std::string part = key.substr(start, end - start);
      if (part.empty()) throw UnknownName(name);
      out = append_spec(std::move(out), spec_for(part));
      start = end + 1;
    }
    return out;
  }
  if (auto k = detail::parse_family(key, 'A')) return spec_of(abelian(*k));
  if (auto m = detail::parse_family(key, 'H')) return spec_of(heisenberg(*m));
  throw UnknownName(name);
}

/// Instantiated algebra; parameters default to their declared values.
inline LieAlgebra get(const std::string& name, const std::map<std::string, Scalar>& params = {}) {
  const AlgebraSpec spec = spec_for(name);
  for (const auto& [k, v] : params)
    if (std::none_of(spec.params.begin(), spec.params.end(), [&](const auto& p) { return p.first == k; }))
      throw MissingParameter(k + " (not a parameter of " + name + ")");
  return instantiate(spec, params);
}

inline ExpectedInvariants expected_invariants(const std::string& name) {
  const CatalogueEntry* e = find_entry(name);
  if (!e) throw UnknownName(name);
  ExpectedInvariants out;
  for (const auto& x : e->expectations) {
    switch (x.kind) {
      case Invariant::MultiplierPair:
        out.dim_M = Cited<int>{x.value, x.source};
        out.s = Cited<int>{x.second, x.source};
        break;
      case Invariant::MultiplierDim:
        if (!out.dim_M) out.dim_M = Cited<int>{x.value, x.source};
        break;
      case Invariant::SInvariant:
        if (!out.s) out.s = Cited<int>{x.value, x.source};
        break;
      case Invariant::DerivedDim: out.dim_L2 = Cited<int>{x.value, x.source}; break;
      case Invariant::CenterDim: out.dim_Z = Cited<int>{x.value, x.source}; break;
      case Invariant::NilpotencyClass: out.nilpotency_class = Cited<int>{x.value, x.source}; break;
      case Invariant::NonCapable: out.capable = Cited<bool>{x.value == 0, x.source}; break;
      case Invariant::CenterInDerived:
      case Invariant::CenterEqualsDerived: break;
    }
  }
  return out;
}

struct MainTheoremMember {
  std::string name;          // as listed in the theorem
  std::string construction;  // catalogue name it resolves to
};

inline std::vector<MainTheoremMember> main_theorem_list() {
  return {
      {"L(4,5,2,4)⊕A(4)", "L_{5,8}⊕A(4)"}, {"L(3,4,1,4)⊕A(3)", "L_{4,3}⊕A(3)"},
      {"L(4,5,1,6)⊕A(2)", "L_{5,5}⊕A(2)"}, {"L_{6,22}(eps)⊕A(2)", "L_{6,22}⊕A(2)"},
      {"L_{6,26}⊕A(1)", "L_{6,26}⊕A(1)"}, {"L_{6,10}", "L_{6,10}"},
      {"L_{6,23}", "L_{6,23}"},           {"L_{6,25}", "L_{6,25}"},
      {"37B", "37B"},                     {"37C", "37C"},
      {"37D", "37D"},
  };
}

/// Parameter names of an entry (including those of its summands).
inline std::vector<std::string> parameters_of(const std::string& name) {
  std::vector<std::string> out;
  for (const auto& p : spec_for(name).params) out.push_back(p.first);
  return out;
}

/// All entries as one multi-section text file.
inline std::string export_catalogue() {
  std::string out;
  for (const auto& e : list_entries()) {
    out += "# section: " + e.name + "\n";
    out += serialize(spec_for(e.name));
    out += "\n";
  }
  return out;
}

}  // namespace liemult

#endif  // LIEMULT_CATALOGUE_HPP

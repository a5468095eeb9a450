#ifndef LIEMULT_HALL_HPP
#define LIEMULT_HALL_HPP

// Free nilpotent Lie algebras F(d, c) = F / gamma_{c+1}(F) on d generators.
//
// The basis is the Lyndon basis, a Hall set: Lyndon words over the letters
// 0..d-1 of length at most c, ordered by degree and then lexicographically,
// each bracketed by its standard factorization w = uv (v the longest proper
// Lyndon suffix). Every basis element is therefore literally [u, v] for two
// earlier basis elements, which the presentation code relies on.
//
// Brackets are collected by expanding basis elements into the free
// associative algebra. The standard bracketing P(w) equals w plus words
// that are lexicographically larger, so a homogeneous Lie polynomial is
// rewritten by repeatedly cancelling its smallest word.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

constexpr long long kDefaultBasisCap = 5000;

/// Basis cap from LIEMULT_BASIS_CAP, or the default.
inline long long basis_cap_from_env() {
  if (const char* s = std::getenv("LIEMULT_BASIS_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultBasisCap;
}

inline long long mobius(long long n) {
  long long result = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

inline long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Dimension of the degree-m component of the free Lie algebra on d
/// generators (Witt's formula).
inline long long witt_dim(long long d, long long m) {
  if (d < 1 || m < 1) throw std::invalid_argument("witt_dim: arguments must be positive");
  long long sum = 0;
  for (long long e = 1; e <= m; ++e)
    if (m % e == 0) sum += mobius(e) * ipow(d, m / e);
  return sum / m;
}

struct HallWord {
  std::vector<std::uint8_t> letters;
  int degree = 1;
  /// Children of the standard factorization; -1 for a generator.
  int left = -1;
  int right = -1;
};

struct HallBasis {
  int generators = 0;
  int max_degree = 0;
  std::vector<HallWord> words;
  /// dims_by_degree[m-1] is the number of words of degree m.
  std::vector<int> dims_by_degree;
  /// Index of the first word of degree m is degree_offset[m-1].
  std::vector<int> degree_offset;

  int size() const { return static_cast<int>(words.size()); }

  /// Bracket notation using 1-based generator names, e.g. [x1,[x1,x2]].
  std::string describe(int idx) const {
    const HallWord& w = words[static_cast<std::size_t>(idx)];
    if (w.left < 0) return "x" + std::to_string(w.letters.front() + 1);
    return "[" + describe(w.left) + "," + describe(w.right) + "]";
  }
};

inline HallBasis hall_basis(int d, int c, long long cap = kDefaultBasisCap) {
  if (d < 1 || c < 1) throw std::invalid_argument("hall_basis: d and c must be positive");
  long long total = 0;
  for (int m = 1; m <= c; ++m) {
    total += witt_dim(d, m);
    if (total > cap) throw ResourceLimit(total, cap);
  }

  // Duval's algorithm enumerates Lyndon words of length <= c in lex order.
  std::vector<std::vector<std::uint8_t>> lyndon;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    lyndon.emplace_back(w.begin(), w.end());
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(c)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == d - 1) w.pop_back();
  }
  std::stable_sort(lyndon.begin(), lyndon.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  HallBasis hb;
  hb.generators = d;
  hb.max_degree = c;
  hb.dims_by_degree.assign(static_cast<std::size_t>(c), 0);
  hb.degree_offset.assign(static_cast<std::size_t>(c), 0);
  std::map<std::vector<std::uint8_t>, int> index;
  for (const auto& word : lyndon) {
    HallWord hw;
    hw.letters = word;
    hw.degree = static_cast<int>(word.size());
    if (hw.degree > 1) {
      // Longest proper suffix that is a Lyndon word; shorter words are already indexed.
      for (std::size_t cut = 1; cut < word.size(); ++cut) {
        auto it = index.find(std::vector<std::uint8_t>(word.begin() + static_cast<long>(cut), word.end()));
        if (it == index.end()) continue;
        hw.right = it->second;
        hw.left = index.at(std::vector<std::uint8_t>(word.begin(), word.begin() + static_cast<long>(cut)));
        break;
      }
      if (hw.left < 0) throw std::logic_error("hall_basis: missing standard factorization");
    }
    const int id = static_cast<int>(hb.words.size());
    if (hb.dims_by_degree[static_cast<std::size_t>(hw.degree - 1)]++ == 0)
      hb.degree_offset[static_cast<std::size_t>(hw.degree - 1)] = id;
    index.emplace(word, id);
    hb.words.push_back(std::move(hw));
  }
  return hb;
}

namespace detail {

using Word = std::vector<std::uint8_t>;
using AssocPoly = std::map<Word, long long>;

inline AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Word vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      out[uv] += x * y;
      out[vu] -= x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

struct FreeNilpotent {
  HallBasis basis;
  LieAlgebra algebra;
};

inline FreeNilpotent free_nilpotent(int d, int c, long long cap = kDefaultBasisCap) {
  FreeNilpotent out{hall_basis(d, c, cap), LieAlgebra()};
  const HallBasis& hb = out.basis;
  const int n = hb.size();

  std::vector<detail::AssocPoly> expansion(static_cast<std::size_t>(n));
  std::map<detail::Word, int> index;
  for (int i = 0; i < n; ++i) {
    const HallWord& w = hb.words[static_cast<std::size_t>(i)];
    index.emplace(w.letters, i);
    expansion[static_cast<std::size_t>(i)] =
        w.left < 0 ? detail::AssocPoly{{w.letters, 1}}
                   : detail::commutator(expansion[static_cast<std::size_t>(w.left)],
                                        expansion[static_cast<std::size_t>(w.right)]);
  }

  auto collect = [&](detail::AssocPoly p) {
    std::map<int, long long> coeffs;
    while (!p.empty()) {
      const auto [word, a] = *p.begin();
      auto it = index.find(word);
      if (it == index.end()) throw std::logic_error("free_nilpotent: leading word is not Lyndon");
      coeffs[it->second] += a;
      for (const auto& [u, x] : expansion[static_cast<std::size_t>(it->second)]) {
        auto& slot = p[u];
        slot -= a * x;
        if (slot == 0) p.erase(u);
      }
    }
    SparseVec v;
    for (const auto& [k, a] : coeffs)
      if (a != 0) v.emplace_back(k, Scalar(static_cast<long>(a)));
    return v;
  };

  std::vector<Product> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (hb.words[static_cast<std::size_t>(i)].degree + hb.words[static_cast<std::size_t>(j)].degree > c) continue;
      SparseVec v = collect(detail::commutator(expansion[static_cast<std::size_t>(i)],
                                               expansion[static_cast<std::size_t>(j)]));
      if (!v.empty()) ps.push_back({i, j, std::move(v)});
    }
  out.algebra = LieAlgebra(n, ps);
  return out;
}

}  // namespace liemult

#endif  // LIEMULT_HALL_HPP

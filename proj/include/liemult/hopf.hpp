#ifndef LIEMULT_HOPF_HPP
#define LIEMULT_HOPF_HPP

// Free presentations L = F/R of nilpotent Lie algebras and what they give:
// the multiplier (R cap F^2)/[R,F], the cover F/[R,F] with the epicenter,
// and the map g : L^2 (x) L^ab -> M(L) for algebras of class two.
//
// For L of class c with d = dim L/L^2 generators, F is the free nilpotent
// algebra F(d, c+1). Truncating the free algebra at class c+1 changes
// neither R cap F^2 nor [R,F] modulo gamma_{c+2}(F), which lies in [R,F].

#include <optional>
#include <vector>

#include "liemult/hall.hpp"
#include "liemult/multiplier.hpp"

namespace liemult {

struct Presentation {
  LieAlgebra target;
  int generators = 0;  // d = dim L^ab
  int target_class = 0;
  FreeNilpotent free;
  /// Basis vectors of L that the free generators map to.
  std::vector<int> generator_indices;
  /// pi(b) in L for every Hall basis element b of F.
  std::vector<SparseVec> image;
  /// R = ker pi.
  std::vector<SparseVec> relations;
  /// R cap F^2.
  std::vector<SparseVec> relations_in_derived;
  /// [R, F].
  Echelon commutator_relations{0};

  int free_dim() const { return free.algebra.dim(); }

  SparseVec project(const SparseVec& f) const {
    SparseVec out;
    for (const auto& [i, x] : f) out = axpy(out, x, image[static_cast<std::size_t>(i)]);
    return out;
  }
};

namespace detail {

/// Kernel of pi restricted to the given free basis indices, as sparse vectors in F.
inline std::vector<SparseVec> kernel_on(const std::vector<SparseVec>& image, int target_dim,
                                        const std::vector<int>& columns) {
  Matrix m(static_cast<std::size_t>(target_dim), zero_vec(static_cast<int>(columns.size())));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [k, x] : image[static_cast<std::size_t>(columns[c])]) m[static_cast<std::size_t>(k)][c] = x;
  std::vector<SparseVec> out;
  for (const Vec& v : kernel(m, static_cast<int>(columns.size()))) {
    SparseVec s;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (sgn(v[c]) != 0) s.emplace_back(columns[c], v[c]);
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Presentation on a minimal generating set: the standard basis vectors that
/// complete the echelon basis of L^2, first or last ones per `order`.
inline Presentation presentation(const LieAlgebra& l, long long cap = kDefaultBasisCap,
                                 ComplementOrder order = ComplementOrder::First) {
  Presentation p;
  p.target = l;
  p.target_class = nilpotency_class(l);
  const Subspace derived = derived_subalgebra(l);
  p.generator_indices = detail::echelon_of(derived, order).free_columns();
  p.generators = static_cast<int>(p.generator_indices.size());
  p.free = free_nilpotent(p.generators, p.target_class + 1, cap);

  const HallBasis& hb = p.free.basis;
  const int nf = hb.size();
  p.image.resize(static_cast<std::size_t>(nf));
  for (int b = 0; b < nf; ++b) {
    const HallWord& w = hb.words[static_cast<std::size_t>(b)];
    p.image[static_cast<std::size_t>(b)] =
        w.left < 0 ? SparseVec{{p.generator_indices[w.letters.front()], Scalar(1)}}
                   : l.bracket(p.image[static_cast<std::size_t>(w.left)], p.image[static_cast<std::size_t>(w.right)]);
  }

  std::vector<int> all(static_cast<std::size_t>(nf));
  for (int b = 0; b < nf; ++b) all[static_cast<std::size_t>(b)] = b;
  p.relations = detail::kernel_on(p.image, l.dim(), all);
  std::vector<int> derived_cols(all.begin() + p.generators, all.end());
  p.relations_in_derived = detail::kernel_on(p.image, l.dim(), derived_cols);

  // R is an ideal and F is generated by the degree-one elements, so [R,F] is
  // spanned by the [r, x_g].
  p.commutator_relations = Echelon(nf);
  for (const auto& r : p.relations)
    for (int g = 0; g < p.generators; ++g)
      p.commutator_relations.insert(p.free.algebra.bracket(r, SparseVec{{g, Scalar(1)}}));
  return p;
}

inline int hopf_multiplier_dim(const Presentation& p) {
  return static_cast<int>(p.relations_in_derived.size()) - p.commutator_relations.rank();
}

inline int hopf_multiplier_dim(const LieAlgebra& l, long long cap = kDefaultBasisCap) {
  return hopf_multiplier_dim(presentation(l, cap));
}

struct CoverReport {
  /// L* = F / C with C = [R,F] (R lies in F^2 for a minimal presentation).
  LieAlgebra cover;
  /// Images in L of the basis vectors of L* (rows are vectors of L).
  Matrix projection;
  Subspace cover_center;
  /// Image of Z(L*) in L.
  Subspace epicenter;
  bool is_capable = false;
  int multiplier_dim = 0;
};

inline CoverReport cover_and_epicenter(const LieAlgebra& l, long long cap = kDefaultBasisCap,
                                       ComplementOrder order = ComplementOrder::First) {
  const Presentation p = presentation(l, cap, order);
  const int n = l.dim();

  // C/[R,F] must complement (R cap F^2)/[R,F] inside R/[R,F]; since
  // R = R cap F^2 here the complement is trivial and C = [R,F].
  Echelon c(p.free_dim(), order == ComplementOrder::Last);
  for (const auto& r : p.commutator_relations.rows()) c.insert(r);
  if (p.relations.size() != p.relations_in_derived.size())
    throw std::logic_error("cover: relation outside F^2 in a minimal presentation");

  CoverReport out;
  QuotientResult q = quotient_by_echelon(p.free.algebra, c);
  out.cover = std::move(q.algebra);
  for (int b : q.basis_indices) out.projection.push_back(to_dense(p.image[static_cast<std::size_t>(b)], n));
  out.cover_center = center(out.cover);

  Matrix images;
  for (const Vec& z : out.cover_center.basis()) {
    Vec v = zero_vec(n);
    for (std::size_t k = 0; k < z.size(); ++k)
      if (sgn(z[k]) != 0)
        for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] += z[k] * out.projection[k][static_cast<std::size_t>(t)];
    images.push_back(std::move(v));
  }
  out.epicenter = Subspace::span(n, std::move(images));
  out.is_capable = out.epicenter.dim() == 0;
  out.multiplier_dim = hopf_multiplier_dim(p);
  return out;
}

struct GaneaData {
  int derived_dim = 0;      // m = dim L^2
  int abelianized_dim = 0;  // d = dim L^ab
  int tensor_dim = 0;       // m * d
  /// Columns: g(x_a (x) z_b) reduced modulo [R,F], column index a*d + b.
  std::vector<SparseVec> g_images;
  int g_rank = 0;
  int ker_g_dim = 0;
  /// Spanning set of K in L^2 (x) L^ab coordinates.
  Matrix k_generators;
  int k_dim = 0;
  bool k_in_ker_g = false;
  bool images_in_multiplier = false;
  int multiplier_dim = 0;
  int abelian_multiplier_dim = 0;

  /// dim ker g - dim(L^2 (x) L^ab) + dim M(L) - dim M(L^ab) + dim L^2.
  int alternating_sum() const {
    return ker_g_dim - tensor_dim + multiplier_dim - abelian_multiplier_dim + derived_dim;
  }
};

inline GaneaData ganea_data(const LieAlgebra& l, long long cap = kDefaultBasisCap) {
  const int cls = nilpotency_class(l);
  if (cls != 2) throw WrongClass(cls);
  const Presentation p = presentation(l, cap);
  const int n = l.dim();
  const Subspace derived = derived_subalgebra(l);

  GaneaData out;
  out.derived_dim = derived.dim();
  out.abelianized_dim = p.generators;
  out.tensor_dim = out.derived_dim * out.abelianized_dim;
  out.multiplier_dim = hopf_multiplier_dim(p);
  out.abelian_multiplier_dim = static_cast<int>(choose2(p.generators));
  const int d = p.generators;

  // Lift each basis vector of L^2 to F^2 through pi.
  std::vector<int> derived_cols;
  for (int b = d; b < p.free_dim(); ++b) derived_cols.push_back(b);
  Matrix pi(static_cast<std::size_t>(n), zero_vec(static_cast<int>(derived_cols.size())));
  for (std::size_t c = 0; c < derived_cols.size(); ++c)
    for (const auto& [k, x] : p.image[static_cast<std::size_t>(derived_cols[c])]) pi[static_cast<std::size_t>(k)][c] = x;
  std::vector<SparseVec> lifts;
  for (const Vec& x : derived.basis()) {
    const auto sol = solve(pi, x, static_cast<int>(derived_cols.size()));
    if (!sol) throw std::logic_error("ganea_data: L^2 element without a lift to F^2");
    SparseVec lift;
    for (std::size_t c = 0; c < derived_cols.size(); ++c)
      if (sgn((*sol)[c]) != 0) lift.emplace_back(derived_cols[c], (*sol)[c]);
    lifts.push_back(std::move(lift));
  }

  const LieAlgebra& f = p.free.algebra;
  out.images_in_multiplier = true;
  Echelon image_span(p.free_dim());
  for (int a = 0; a < out.derived_dim; ++a)
    for (int b = 0; b < d; ++b) {
      SparseVec v = f.bracket(lifts[static_cast<std::size_t>(a)], SparseVec{{b, Scalar(1)}});
      if (!p.project(v).empty()) out.images_in_multiplier = false;
      v = p.commutator_relations.reduce(v);
      image_span.insert(v);
      out.g_images.push_back(std::move(v));
    }
  out.g_rank = image_span.rank();
  out.ker_g_dim = out.tensor_dim - out.g_rank;

  // Coordinates in L^ab of a basis vector of L: its remainder modulo L^2,
  // read off at the generator positions.
  std::vector<int> gen_pos(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < d; ++g) gen_pos[static_cast<std::size_t>(p.generator_indices[static_cast<std::size_t>(g)])] = g;
  auto ab_coords = [&](int i) {
    Vec r = derived.reduce(unit_vec(n, i));
    Vec out_v = zero_vec(d);
    for (int t = 0; t < n; ++t)
      if (sgn(r[static_cast<std::size_t>(t)]) != 0) out_v[static_cast<std::size_t>(gen_pos[static_cast<std::size_t>(t)])] = r[static_cast<std::size_t>(t)];
    return out_v;
  };
  auto add_term = [&](Vec& acc, int i, int j, int k) {
    // [x_i, x_j] (x) (x_k + L^2)
    const Vec x = derived.coordinates(to_dense(l.basis_bracket(i, j), n));
    const Vec z = ab_coords(k);
    for (int a = 0; a < out.derived_dim; ++a)
      for (int b = 0; b < d; ++b) acc[static_cast<std::size_t>(a * d + b)] += x[static_cast<std::size_t>(a)] * z[static_cast<std::size_t>(b)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec t = zero_vec(out.tensor_dim);
        add_term(t, i, j, k);
        add_term(t, k, i, j);
        add_term(t, j, k, i);
        if (!is_zero(t)) out.k_generators.push_back(std::move(t));
      }
  out.k_dim = rank(out.k_generators, out.tensor_dim);

  out.k_in_ker_g = true;
  for (const Vec& t : out.k_generators) {
    SparseVec acc;
    for (int c = 0; c < out.tensor_dim; ++c)
      if (sgn(t[static_cast<std::size_t>(c)]) != 0) acc = axpy(acc, t[static_cast<std::size_t>(c)], out.g_images[static_cast<std::size_t>(c)]);
    if (!p.commutator_relations.reduce(acc).empty()) out.k_in_ker_g = false;
  }
  return out;
}

}  // namespace liemult

#endif  // LIEMULT_HOPF_HPP

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/silting/based_algebra.hpp"

namespace tautilt {

/// A map between direct sums of indecomposable projectives: entry (r, s)
/// is an element of e_{src[r]} A e_{dst[s]} in corner coordinates, acting
/// by right multiplication P_{src[r]} -> P_{dst[s]}.
struct BlockMap {
  std::vector<std::size_t> src, dst;
  std::vector<std::vector<FFVec>> e;

  friend bool operator==(const BlockMap&, const BlockMap&) = default;
};

/// A complex P^{-1} -> P^0 of projectives in degrees -1 and 0.
struct TwoTermComplex {
  BlockMap d;

  const std::vector<std::size_t>& minus1() const { return d.src; }
  const std::vector<std::size_t>& zero() const { return d.dst; }

  std::vector<std::int64_t> g_vector(std::size_t t) const {
    std::vector<std::int64_t> g(t, 0);
    for (auto v : d.dst) ++g.at(v);
    for (auto v : d.src) --g.at(v);
    return g;
  }
  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

struct ChainMap {
  BlockMap f1, f0;  // degree -1 and degree 0 components
};

namespace detail {

inline BlockMap zero_map(const BasedAlgebra& a, const std::vector<std::size_t>& src, const std::vector<std::size_t>& dst) {
  BlockMap m{src, dst, {}};
  m.e.resize(src.size());
  for (std::size_t r = 0; r < src.size(); ++r)
    for (std::size_t s = 0; s < dst.size(); ++s) m.e[r].emplace_back(a.corner_dim(src[r], dst[s]), a.field().zero());
  return m;
}

inline bool is_zero_vec(const FFVec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

inline void axpy(const FiniteField& f, FFVec& y, FiniteField::value_type c, const FFVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

/// X then Y.
inline BlockMap compose(const BasedAlgebra& a, const BlockMap& x, const BlockMap& y) {
  if (x.dst != y.src) throw AlgebraMismatch("composing maps with incompatible middle terms");
  BlockMap z = zero_map(a, x.src, y.dst);
  for (std::size_t r = 0; r < x.src.size(); ++r)
    for (std::size_t m = 0; m < x.dst.size(); ++m) {
      if (is_zero_vec(x.e[r][m])) continue;
      for (std::size_t s = 0; s < y.dst.size(); ++s) {
        if (is_zero_vec(y.e[m][s])) continue;
        const auto p = a.corner_multiply(x.src[r], x.dst[m], y.dst[s], x.e[r][m], y.e[m][s]);
        axpy(a.field(), z.e[r][s], a.field().one(), p);
      }
    }
  return z;
}

/// Coordinates on Hom(src, dst) as a flat vector.
struct Layout {
  std::vector<std::size_t> src, dst;
  std::vector<std::size_t> offset;  // per (r, s), row-major
  std::size_t total = 0;

  Layout(const BasedAlgebra& a, std::vector<std::size_t> s, std::vector<std::size_t> d)
      : src(std::move(s)), dst(std::move(d)) {
    for (std::size_t r = 0; r < src.size(); ++r)
      for (std::size_t c = 0; c < dst.size(); ++c) {
        offset.push_back(total);
        total += a.corner_dim(src[r], dst[c]);
      }
  }
  void flatten_into(const BlockMap& m, FFVec& out, std::size_t base) const {
    for (std::size_t r = 0; r < src.size(); ++r)
      for (std::size_t c = 0; c < dst.size(); ++c) {
        const auto& v = m.e[r][c];
        std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(base + offset[r * dst.size() + c]));
      }
  }
  BlockMap unflatten(const BasedAlgebra& a, const FFVec& v, std::size_t base) const {
    BlockMap m = zero_map(a, src, dst);
    for (std::size_t r = 0; r < src.size(); ++r)
      for (std::size_t c = 0; c < dst.size(); ++c) {
        auto& e = m.e[r][c];
        const std::size_t o = base + offset[r * dst.size() + c];
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = v[o + k];
      }
    return m;
  }
};

/// Chain maps T -> U, null-homotopic maps, and representatives of a basis
/// of Hom_K(T, U). Chain maps are flattened as (f1, f0).
struct HomData {
  Layout l1, l0;
  std::size_t cycle_dim = 0;
  Subspace<FiniteField> boundaries;
  std::vector<ChainMap> basis;

  FFVec flatten(const ChainMap& c) const {
    FFVec v(l1.total + l0.total, 0);
    l1.flatten_into(c.f1, v, 0);
    l0.flatten_into(c.f0, v, l1.total);
    return v;
  }
};

inline HomData hom_data(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u) {
  const auto& f = a.field();
  HomData h{Layout(a, t.minus1(), u.minus1()), Layout(a, t.zero(), u.zero()), 0,
            Subspace<FiniteField>(f, 0), {}};
  const Layout lt(a, t.minus1(), u.zero());
  const Layout lh(a, t.zero(), u.minus1());
  const std::size_t n = h.l1.total + h.l0.total;
  // Cycle condition: d_T f0 - f1 d_U = 0.
  Matrix<FiniteField> cond(f, lt.total, n);
  for (std::size_t k = 0; k < n; ++k) {
    FFVec unit(n, f.zero());
    unit[k] = f.one();
    BlockMap img;
    if (k < h.l1.total) {
      img = compose(a, h.l1.unflatten(a, unit, 0), u.d);
      for (auto& row : img.e)
        for (auto& v : row)
          for (auto& x : v) x = f.neg(x);
    } else {
      img = compose(a, t.d, h.l0.unflatten(a, unit, h.l1.total));
    }
    FFVec col(lt.total, f.zero());
    lt.flatten_into(img, col, 0);
    for (std::size_t r = 0; r < lt.total; ++r) cond(r, k) = col[r];
  }
  const auto cycles = nullspace(cond);
  h.cycle_dim = cycles.rows();
  h.boundaries = Subspace<FiniteField>(f, n);
  for (std::size_t k = 0; k < lh.total; ++k) {
    FFVec unit(lh.total, f.zero());
    unit[k] = f.one();
    const auto hm = lh.unflatten(a, unit, 0);
    const ChainMap b{compose(a, t.d, hm), compose(a, hm, u.d)};
    h.boundaries.insert(h.flatten(b));
  }
  Subspace<FiniteField> span = h.boundaries;
  for (std::size_t r = 0; r < cycles.rows(); ++r) {
    const auto z = cycles.row(r);
    if (span.insert(z)) h.basis.push_back({h.l1.unflatten(a, z, 0), h.l0.unflatten(a, z, h.l1.total)});
  }
  return h;
}

inline ChainMap compose(const BasedAlgebra& a, const ChainMap& x, const ChainMap& y) {
  return {compose(a, x.f1, y.f1), compose(a, x.f0, y.f0)};
}

/// A three-term complex C0 -> C1 -> C2 used for cones.
struct Tri {
  std::vector<std::size_t> c0, c1, c2;
  std::vector<std::vector<FFVec>> d1, d2;
};

inline std::optional<std::pair<std::size_t, std::size_t>> find_unit(const BasedAlgebra& a, const std::vector<std::size_t>& rows,
                                                                     const std::vector<std::size_t>& cols,
                                                                     const std::vector<std::vector<FFVec>>& m) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < cols.size(); ++s)
      if (rows[r] == cols[s] && a.augmentation(rows[r], m[r][s]) != 0) return std::pair{r, s};
  return std::nullopt;
}

/// Splits off a contractible summand P --phi--> P from the differential m
/// (rows, cols), updating m to eps - gamma phi^{-1} beta.
inline void gauss_eliminate(const BasedAlgebra& a, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
                            std::vector<std::vector<FFVec>>& m, std::size_t pa, std::size_t pb) {
  const auto& f = a.field();
  const std::size_t v = rows[pa];
  const auto inv = a.corner_inverse(v, m[pa][pb]);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == pa || is_zero_vec(m[r][pb])) continue;
    const auto gi = a.corner_multiply(rows[r], v, v, m[r][pb], inv);
    for (std::size_t s = 0; s < cols.size(); ++s) {
      if (s == pb || is_zero_vec(m[pa][s])) continue;
      axpy(f, m[r][s], f.neg(f.one()), a.corner_multiply(rows[r], v, cols[s], gi, m[pa][s]));
    }
  }
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(pa));
  for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pb));
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pa));
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pb));
}

inline void eliminate_d1(const BasedAlgebra& a, Tri& x) {
  while (auto u = find_unit(a, x.c0, x.c1, x.d1)) {
    const auto [pa, pb] = *u;
    x.d2.erase(x.d2.begin() + static_cast<std::ptrdiff_t>(pb));
    gauss_eliminate(a, x.c0, x.c1, x.d1, pa, pb);
  }
}

inline void eliminate_d2(const BasedAlgebra& a, Tri& x) {
  while (auto u = find_unit(a, x.c1, x.c2, x.d2)) {
    const auto [pb, pc] = *u;
    for (auto& row : x.d1) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pb));
    gauss_eliminate(a, x.c1, x.c2, x.d2, pb, pc);
  }
}

inline std::vector<std::vector<FFVec>> negated(const FiniteField& f, std::vector<std::vector<FFVec>> m) {
  for (auto& row : m)
    for (auto& v : row)
      for (auto& x : v) x = f.neg(x);
  return m;
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Direct sum of the chosen summands, with maps from/to X assembled blockwise.
struct Assembled {
  TwoTermComplex sum;
  ChainMap map;
};

/// f : X -> (+)_c M_{l_c} (left) or f : (+)_c M_{l_c} -> X (right).
inline Assembled assemble(const BasedAlgebra& a, const TwoTermComplex& x, const std::vector<TwoTermComplex>& m,
                          const std::vector<std::pair<std::size_t, ChainMap>>& comps, bool left) {
  TwoTermComplex sum;
  for (const auto& [l, phi] : comps) {
    sum.d.src = concat(sum.d.src, m[l].minus1());
    sum.d.dst = concat(sum.d.dst, m[l].zero());
  }
  sum.d.e = zero_map(a, sum.d.src, sum.d.dst).e;
  ChainMap f = left ? ChainMap{zero_map(a, x.minus1(), sum.d.src), zero_map(a, x.zero(), sum.d.dst)}
                    : ChainMap{zero_map(a, sum.d.src, x.minus1()), zero_map(a, sum.d.dst, x.zero())};
  std::size_t o1 = 0, o0 = 0;
  for (const auto& [l, phi] : comps) {
    const auto& ml = m[l];
    for (std::size_t r = 0; r < ml.minus1().size(); ++r)
      for (std::size_t s = 0; s < ml.zero().size(); ++s) sum.d.e[o1 + r][o0 + s] = ml.d.e[r][s];
    if (left) {
      for (std::size_t r = 0; r < x.minus1().size(); ++r)
        for (std::size_t s = 0; s < ml.minus1().size(); ++s) f.f1.e[r][o1 + s] = phi.f1.e[r][s];
      for (std::size_t r = 0; r < x.zero().size(); ++r)
        for (std::size_t s = 0; s < ml.zero().size(); ++s) f.f0.e[r][o0 + s] = phi.f0.e[r][s];
    } else {
      for (std::size_t r = 0; r < ml.minus1().size(); ++r)
        for (std::size_t s = 0; s < x.minus1().size(); ++s) f.f1.e[o1 + r][s] = phi.f1.e[r][s];
      for (std::size_t r = 0; r < ml.zero().size(); ++r)
        for (std::size_t s = 0; s < x.zero().size(); ++s) f.f0.e[o0 + r][s] = phi.f0.e[r][s];
    }
    o1 += ml.minus1().size();
    o0 += ml.zero().size();
  }
  return {std::move(sum), std::move(f)};
}

/// Minimal left (or right) add(M)-approximation of X in K^b(proj A).
/// Starts from a basis of every Hom_K(X, M_j) and greedily discards
/// components while the rest still generates; a removal-minimal
/// generating set is a basis modulo the radical, hence minimal.
inline std::vector<std::pair<std::size_t, ChainMap>> minimal_approximation(const BasedAlgebra& a, const TwoTermComplex& x,
                                                                           const std::vector<TwoTermComplex>& m, bool left) {
  const std::size_t k = m.size();
  std::vector<HomData> to_x;  // Hom(X, M_j) for left, Hom(M_j, X) for right
  for (std::size_t j = 0; j < k; ++j) to_x.push_back(left ? hom_data(a, x, m[j]) : hom_data(a, m[j], x));
  std::vector<std::vector<std::vector<ChainMap>>> between(k, std::vector<std::vector<ChainMap>>(k));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < k; ++j) between[l][j] = hom_data(a, m[l], m[j]).basis;
  std::vector<std::pair<std::size_t, ChainMap>> comps;
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& phi : to_x[j].basis) comps.emplace_back(j, phi);
  std::vector<bool> alive(comps.size(), true);
  auto generates = [&] {
    for (std::size_t j = 0; j < k; ++j) {
      Subspace<FiniteField> span = to_x[j].boundaries;
      for (std::size_t c = 0; c < comps.size() && span.dim() < to_x[j].cycle_dim; ++c) {
        if (!alive[c]) continue;
        const auto& [l, phi] = comps[c];
        // left: X -> M_l -> M_j ; right: M_j -> M_l -> X
        for (const auto& g : left ? between[l][j] : between[j][l])
          span.insert(to_x[j].flatten(left ? compose(a, phi, g) : compose(a, g, phi)));
      }
      if (span.dim() < to_x[j].cycle_dim) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < comps.size(); ++c) {
    alive[c] = false;
    if (!generates()) alive[c] = true;
  }
  std::vector<std::pair<std::size_t, ChainMap>> out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (alive[c]) out.push_back(std::move(comps[c]));
  return out;
}

}  // namespace detail

inline TwoTermComplex stalk_complex(const BasedAlgebra& a, std::size_t vertex, bool shifted) {
  if (vertex >= a.vertex_count()) throw InvalidArgument("vertex out of range");
  TwoTermComplex c;
  if (shifted) c.d.src = {vertex};
  else c.d.dst = {vertex};
  c.d.e = detail::zero_map(a, c.d.src, c.d.dst).e;
  return c;
}

/// dim Hom_{K^b(proj A)}(T, U[shift]); zero outside shift in {-1, 0, 1}.
inline std::size_t hom_in_homotopy(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u, int shift) {
  for (const auto* c : {&t, &u}) {
    for (auto v : c->minus1())
      if (v >= a.vertex_count()) throw AlgebraMismatch("complex refers to a vertex the algebra does not have");
    for (auto v : c->zero())
      if (v >= a.vertex_count()) throw AlgebraMismatch("complex refers to a vertex the algebra does not have");
    if (c->d.e.size() != c->minus1().size()) throw AlgebraMismatch("differential has wrong shape");
    for (std::size_t r = 0; r < c->minus1().size(); ++r) {
      if (c->d.e[r].size() != c->zero().size()) throw AlgebraMismatch("differential has wrong shape");
      for (std::size_t s = 0; s < c->zero().size(); ++s)
        if (c->d.e[r][s].size() != a.corner_dim(c->minus1()[r], c->zero()[s]))
          throw AlgebraMismatch("differential entry has wrong corner dimension");
    }
  }
  using detail::Layout;
  const auto& f = a.field();
  if (shift == 0) {
    const auto h = detail::hom_data(a, t, u);
    return h.basis.size();
  }
  if (shift == 1) {
    const Layout target(a, t.minus1(), u.zero());
    Subspace<FiniteField> img(f, target.total);
    const Layout h0(a, t.zero(), u.zero()), h1(a, t.minus1(), u.minus1());
    for (std::size_t k = 0; k < h0.total; ++k) {
      FFVec unit(h0.total, f.zero());
      unit[k] = f.one();
      FFVec v(target.total, f.zero());
      target.flatten_into(detail::compose(a, t.d, h0.unflatten(a, unit, 0)), v, 0);
      img.insert(v);
    }
    for (std::size_t k = 0; k < h1.total; ++k) {
      FFVec unit(h1.total, f.zero());
      unit[k] = f.one();
      FFVec v(target.total, f.zero());
      target.flatten_into(detail::compose(a, h1.unflatten(a, unit, 0), u.d), v, 0);
      img.insert(v);
    }
    return target.total - img.dim();
  }
  if (shift == -1) {
    const Layout g(a, t.zero(), u.minus1());
    const Layout c1(a, t.minus1(), u.minus1()), c0(a, t.zero(), u.zero());
    Matrix<FiniteField> m(f, c1.total + c0.total, g.total);
    for (std::size_t k = 0; k < g.total; ++k) {
      FFVec unit(g.total, f.zero());
      unit[k] = f.one();
      const auto gm = g.unflatten(a, unit, 0);
      FFVec v(c1.total + c0.total, f.zero());
      c1.flatten_into(detail::compose(a, t.d, gm), v, 0);
      c0.flatten_into(detail::compose(a, gm, u.d), v, c1.total);
      for (std::size_t r = 0; r < v.size(); ++r) m(r, k) = v[r];
    }
    return nullspace(m).rows();
  }
  return 0;
}

inline bool is_presilting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands) {
  for (const auto& x : summands)
    for (const auto& y : summands)
      if (hom_in_homotopy(a, x, y, 1) != 0) return false;
  return true;
}

inline std::vector<std::vector<std::int64_t>> g_matrix(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands) {
  std::vector<std::vector<std::int64_t>> g;
  for (const auto& s : summands) g.push_back(s.g_vector(a.vertex_count()));
  return g;
}

/// Presilting with t summands whose g-vectors form a Z-basis.
inline bool is_two_term_silting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands) {
  const std::size_t t = a.vertex_count();
  if (summands.size() != t) return false;
  const auto g = g_matrix(a, summands);
  const RationalField q;
  Matrix<RationalField> m(q, t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) m(i, j) = mpq_class(g[i][j]);
  const auto det = determinant(m);
  if (det != 1 && det != -1) return false;
  return is_presilting(a, summands);
}

inline void canonical_order(const BasedAlgebra& a, std::vector<TwoTermComplex>& summands) {
  const std::size_t t = a.vertex_count();
  std::stable_sort(summands.begin(), summands.end(),
                   [t](const TwoTermComplex& x, const TwoTermComplex& y) { return x.g_vector(t) < y.g_vector(t); });
}

/// A (all P_i in degree 0) and A[1].
inline std::vector<TwoTermComplex> regular_silting(const BasedAlgebra& a, bool shifted = false) {
  std::vector<TwoTermComplex> out;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) out.push_back(stalk_complex(a, i, shifted));
  canonical_order(a, out);
  return out;
}

namespace detail {

inline TwoTermComplex mutate_summand(const BasedAlgebra& a, const std::vector<TwoTermComplex>& t, std::size_t i, bool left) {
  if (i >= t.size()) throw InvalidArgument("mutation index out of range");
  const auto& f = a.field();
  const auto& x = t[i];
  std::vector<TwoTermComplex> m;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != i) m.push_back(t[j]);
  const auto comps = minimal_approximation(a, x, m, left);
  auto [sum, phi] = assemble(a, x, m, comps, left);
  Tri c;
  if (left) {
    // X^{-1} -> X^0 (+) M^{-1} -> M^0
    c.c0 = x.minus1();
    c.c1 = concat(x.zero(), sum.minus1());
    c.c2 = sum.zero();
    const auto dx = negated(f, x.d.e);
    for (std::size_t r = 0; r < c.c0.size(); ++r) c.d1.push_back(concat(dx[r], phi.f1.e[r]));
    for (const auto& row : phi.f0.e) c.d2.push_back(row);
    for (const auto& row : sum.d.e) c.d2.push_back(row);
    eliminate_d1(a, c);
    if (!c.c0.empty()) throw NotTwoTerm("left mutation at summand " + std::to_string(i) + " leaves the two-term window");
    eliminate_d2(a, c);
    return TwoTermComplex{BlockMap{c.c1, c.c2, c.d2}};
  }
  // M^{-1} -> M^0 (+) X^{-1} -> X^0, shifted so M^{-1} sits in degree -1.
  c.c0 = sum.minus1();
  c.c1 = concat(sum.zero(), x.minus1());
  c.c2 = x.zero();
  const auto dm = negated(f, sum.d.e);
  for (std::size_t r = 0; r < c.c0.size(); ++r) c.d1.push_back(concat(dm[r], phi.f1.e[r]));
  for (const auto& row : phi.f0.e) c.d2.push_back(row);
  for (const auto& row : x.d.e) c.d2.push_back(row);
  eliminate_d2(a, c);
  if (!c.c2.empty()) throw NotTwoTerm("right mutation at summand " + std::to_string(i) + " leaves the two-term window");
  eliminate_d1(a, c);
  return TwoTermComplex{BlockMap{c.c0, c.c1, c.d1}};
}

}  // namespace detail

/// Replaces summand i of a basic two-term silting complex by the cone of
/// its minimal left add(T/T_i)-approximation. Throws NotTwoTerm when the
/// result would leave the two-term window.
inline std::vector<TwoTermComplex> left_mutate(const BasedAlgebra& a, std::vector<TwoTermComplex> t, std::size_t i) {
  t[i] = detail::mutate_summand(a, t, i, true);
  canonical_order(a, t);
  return t;
}

/// Dual of left_mutate: the cocone of a minimal right approximation.
inline std::vector<TwoTermComplex> right_mutate(const BasedAlgebra& a, std::vector<TwoTermComplex> t, std::size_t i) {
  t[i] = detail::mutate_summand(a, t, i, false);
  canonical_order(a, t);
  return t;
}

/// Two-term silting objects are determined by their g-vectors.
using SiltingKey = std::vector<std::vector<std::int64_t>>;

inline SiltingKey silting_key(const BasedAlgebra& a, const std::vector<TwoTermComplex>& t) {
  auto g = g_matrix(a, t);
  std::sort(g.begin(), g.end());
  return g;
}

enum class ExploreStatus { CompleteFinite, BudgetExhausted };

inline std::string to_string(ExploreStatus s) {
  return s == ExploreStatus::CompleteFinite ? "CompleteFinite" : "BudgetExhausted";
}

struct ExchangeEdge {
  std::size_t from, to, direction;  // left mutation of objects[from] at summand `direction`
  friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
  friend auto operator<=>(const ExchangeEdge&, const ExchangeEdge&) = default;
};

struct ExchangeGraph {
  ExploreStatus status = ExploreStatus::CompleteFinite;
  std::size_t budget = 0;
  std::vector<std::vector<TwoTermComplex>> objects;  // sorted by key
  std::vector<ExchangeEdge> edges;                   // sorted
  std::vector<std::size_t> left_exits;               // per object: directions leaving the window

  SiltingKey key(const BasedAlgebra& a, std::size_t i) const { return silting_key(a, objects.at(i)); }
};

/// Breadth-first search over left mutations starting from A. Each level
/// is mutated in parallel and merged in a fixed order, so the result does
/// not depend on the thread count.
inline ExchangeGraph explore(const BasedAlgebra& a, std::size_t budget, unsigned threads = 1) {
  if (budget == 0) throw InvalidArgument("budget must be positive");
  threads = std::max(1u, threads);
  const std::size_t t = a.vertex_count();
  std::vector<std::vector<TwoTermComplex>> objects{regular_silting(a)};
  std::map<SiltingKey, std::size_t> index{{silting_key(a, objects[0]), 0}};
  std::vector<ExchangeEdge> edges;
  std::vector<std::size_t> exits(1, 0);
  bool exhausted = false;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty() && !exhausted) {
    // results[k][i] = mutation of frontier[k] at i, or empty if it leaves the window.
    std::vector<std::vector<std::optional<std::vector<TwoTermComplex>>>> results(frontier.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t k = begin; k < frontier.size(); k += step) {
        results[k].resize(t);
        for (std::size_t i = 0; i < t; ++i) {
          try {
            results[k][i] = left_mutate(a, objects[frontier[k]], i);
          } catch (const NotTwoTerm&) {
          }
        }
      }
    };
    if (threads == 1 || frontier.size() == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            work(w, threads);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < frontier.size() && !exhausted; ++k)
      for (std::size_t i = 0; i < t; ++i) {
        if (!results[k][i]) {
          ++exits[frontier[k]];
          continue;
        }
        auto key = silting_key(a, *results[k][i]);
        auto it = index.find(key);
        if (it == index.end()) {
          if (objects.size() == budget) {
            exhausted = true;
            break;
          }
          it = index.emplace(std::move(key), objects.size()).first;
          objects.push_back(std::move(*results[k][i]));
          exits.push_back(0);
          next.push_back(it->second);
        }
        edges.push_back({frontier[k], it->second, i});
      }
    frontier = std::move(next);
  }
  // Canonical order: objects by key.
  std::vector<std::size_t> order(objects.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<SiltingKey> keys;
  for (const auto& o : objects) keys.push_back(silting_key(a, o));
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::vector<std::size_t> rank(objects.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  ExchangeGraph g;
  g.status = exhausted ? ExploreStatus::BudgetExhausted : ExploreStatus::CompleteFinite;
  g.budget = budget;
  for (auto i : order) {
    g.objects.push_back(std::move(objects[i]));
    g.left_exits.push_back(exits[i]);
  }
  for (const auto& e : edges) g.edges.push_back({rank[e.from], rank[e.to], e.direction});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// The support tau-tilting pair (M, P) of a two-term silting complex:
/// M = H^0 of the summands not of the form P_i[1], P = those P_i.
struct SupportTauTiltingPair {
  std::vector<std::vector<std::size_t>> module_dimension_vectors;
  std::vector<std::size_t> projective_vertices;

  std::size_t module_count() const { return module_dimension_vectors.size(); }
};

inline std::vector<std::size_t> h0_dimension_vector(const BasedAlgebra& a, const TwoTermComplex& c) {
  const auto& f = a.field();
  const std::size_t t = a.vertex_count();
  std::vector<std::size_t> dims(t, 0);
  for (std::size_t v = 0; v < t; ++v) {
    std::size_t cols = 0;
    std::vector<std::size_t> off;
    for (auto b : c.zero()) {
      off.push_back(cols);
      cols += a.corner_dim(v, b);
    }
    Subspace<FiniteField> img(f, cols);
    for (std::size_t r = 0; r < c.minus1().size(); ++r) {
      const std::size_t ar = c.minus1()[r];
      for (std::size_t k = 0; k < a.corner_dim(v, ar); ++k) {
        FFVec x(a.corner_dim(v, ar), f.zero());
        x[k] = f.one();
        FFVec row(cols, f.zero());
        for (std::size_t s = 0; s < c.zero().size(); ++s) {
          const auto y = a.corner_multiply(v, ar, c.zero()[s], x, c.d.e[r][s]);
          std::copy(y.begin(), y.end(), row.begin() + static_cast<std::ptrdiff_t>(off[s]));
        }
        img.insert(row);
      }
    }
    dims[v] = cols - img.dim();
  }
  return dims;
}

inline SupportTauTiltingPair support_tau_tilting_of(const BasedAlgebra& a, const std::vector<TwoTermComplex>& t) {
  SupportTauTiltingPair out;
  for (const auto& c : t) {
    if (c.zero().empty()) {
      if (c.minus1().size() != 1) throw InvalidArgument("summand is not indecomposable");
      out.projective_vertices.push_back(c.minus1()[0]);
      continue;
    }
    out.module_dimension_vectors.push_back(h0_dimension_vector(a, c));
  }
  std::sort(out.projective_vertices.begin(), out.projective_vertices.end());
  return out;
}

}  // namespace tautilt

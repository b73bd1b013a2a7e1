#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tautilt/arith/finite_field.hpp"
#include "tautilt/arith/matrix.hpp"
#include "tautilt/arith/poly.hpp"
#include "tautilt/chop/module.hpp"
#include "tautilt/coinv/coinvariant.hpp"
#include "tautilt/perm/group.hpp"

namespace tautilt {

/// Dense coefficient vector over the basis {m * sigma} of C x| H.
template <Field F>
using SkewVector = Vec<F>;

/// The skew group algebra of the coinvariant algebra by H <= S_n.
///
/// Basis index b = monomial * |H| + group index, with monomials in
/// staircase order and group elements in H.elements() order. The product
/// is (f sigma)(g tau) = f (sigma . g) sigma tau where sigma . x_k = x_{sigma(k)}.
template <Field F>
class SkewAlgebra {
 public:
  using value_type = typename F::value_type;

  SkewAlgebra(std::size_t n, PermutationGroup h, F field)
      : ring_(coinvariant_ring(n)), h_(std::move(h)), field_(std::move(field)) {
    if (h_.degree() != n) throw InvalidArgument("group degree differs from n");
    const std::size_t m = ring_->dimension();
    perm_.resize(h_.order());
    for (std::size_t g = 0; g < h_.order(); ++g) {
      perm_[g].reserve(m);
      for (std::size_t k = 0; k < m; ++k) perm_[g].push_back(ring_->permute(h_.element(g), k));
    }
    prod_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) prod_[i * m + j] = ring_->product(i, j);
  }

  std::size_t n() const { return ring_->n(); }
  const PermutationGroup& group() const { return h_; }
  const F& field() const { return field_; }
  const CoinvariantRing& ring() const { return *ring_; }
  std::size_t dimension() const { return ring_->dimension() * h_.order(); }
  std::size_t index(std::size_t monomial, std::size_t g) const { return monomial * h_.order() + g; }
  std::size_t monomial_of(std::size_t b) const { return b / h_.order(); }
  std::size_t group_of(std::size_t b) const { return b % h_.order(); }
  std::size_t degree_of(std::size_t b) const { return ring_->degree_of(monomial_of(b)); }
  /// Basis index of Delta * identity, the functional phi reads this coordinate.
  std::size_t delta_index() const { return index(ring_->delta_index(), 0); }

  SkewVector<F> zero() const { return SkewVector<F>(dimension(), field_.zero()); }
  SkewVector<F> basis_vector(std::size_t b) const {
    auto v = zero();
    v.at(b) = field_.one();
    return v;
  }
  SkewVector<F> one() const { return basis_vector(0); }
  SkewVector<F> group_element(std::size_t g) const { return basis_vector(index(0, g)); }

  /// Embeds sum_g c_g g from kH.
  SkewVector<F> from_group_algebra(const Vec<F>& kh) const {
    if (kh.size() != h_.order()) throw InvalidArgument("group algebra vector has wrong length");
    auto v = zero();
    for (std::size_t g = 0; g < kh.size(); ++g) v[index(0, g)] = kh[g];
    return v;
  }

  /// Embeds a coinvariant element as f * identity.
  SkewVector<F> from_coinvariant(const CoinvariantElement<F>& f) const {
    auto v = zero();
    for (const auto& [k, c] : f.terms()) v[index(k, 0)] = c;
    return v;
  }

  SkewVector<F> multiply(const SkewVector<F>& a, const SkewVector<F>& b) const {
    check(a);
    check(b);
    const std::size_t order = h_.order(), m = ring_->dimension();
    auto r = zero();
    std::vector<std::size_t> nzb;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!field_.is_zero(b[j])) nzb.push_back(j);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (field_.is_zero(a[i])) continue;
      const std::size_t m1 = i / order, g1 = i % order;
      for (std::size_t j : nzb) {
        const std::size_t m2 = j / order, g2 = j % order;
        const std::size_t g = h_.product_index(g1, g2);
        const auto ab = field_.mul(a[i], b[j]);
        for (const auto& [k, c] : perm_[g1][m2])
          for (const auto& [l, d] : prod_[m1 * m + k]) {
            auto& slot = r[l * order + g];
            slot = field_.add(slot, field_.mul(ab, field_.from_int(checked_mul(c, d))));
          }
      }
    }
    return r;
  }

  SkewVector<F> add(const SkewVector<F>& a, const SkewVector<F>& b) const {
    check(a);
    check(b);
    auto r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(r[i], b[i]);
    return r;
  }

  SkewVector<F> scale(const value_type& s, SkewVector<F> a) const {
    for (auto& x : a) x = field_.mul(s, x);
    return a;
  }

  /// phi: coefficient of Delta * identity.
  value_type phi(const SkewVector<F>& a) const {
    check(a);
    return a[delta_index()];
  }

  /// <a, b> = phi(a b).
  value_type pairing(const SkewVector<F>& a, const SkewVector<F>& b) const { return phi(multiply(a, b)); }

  bool is_zero(const SkewVector<F>& a) const {
    return std::all_of(a.begin(), a.end(), [&](const auto& x) { return field_.is_zero(x); });
  }

  bool equal(const SkewVector<F>& a, const SkewVector<F>& b) const {
    check(a);
    check(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field_.equal(a[i], b[i])) return false;
    return true;
  }

  bool is_homogeneous(const SkewVector<F>& a, std::size_t degree) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field_.is_zero(a[i]) && degree_of(i) != degree) return false;
    return true;
  }

  /// Integer value of the pairing on two basis elements.
  std::int64_t basis_pairing(std::size_t b1, std::size_t b2) const {
    const std::size_t order = h_.order(), m = ring_->dimension();
    const std::size_t m1 = b1 / order, g1 = b1 % order, m2 = b2 / order, g2 = b2 % order;
    if (h_.product_index(g1, g2) != 0) return 0;
    std::int64_t s = 0;
    for (const auto& [k, c] : perm_[g1][m2])
      for (const auto& [l, d] : prod_[m1 * m + k])
        if (l == ring_->delta_index()) s = checked_add(s, checked_mul(c, d));
    return s;
  }

  std::string to_string(const SkewVector<F>& a) const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (field_.is_zero(a[i])) continue;
      if (!s.empty()) s += " + ";
      s += field_.to_string(a[i]) + "*" + monomial_to_string(ring_->monomial(monomial_of(i))) + "*" +
           h_.element(group_of(i)).to_cycle_string();
    }
    return s.empty() ? "0" : s;
  }

  void check(const SkewVector<F>& a) const {
    if (a.size() != dimension()) throw AlgebraMismatch("element does not belong to this skew group algebra");
  }

 private:
  std::shared_ptr<const CoinvariantRing> ring_;
  PermutationGroup h_;
  F field_;
  std::vector<std::vector<IntSparse>> perm_;  // perm_[g][k] = g . x^k
  std::vector<IntSparse> prod_;               // prod_[i*m + j] = x^i x^j
};

// ---------------------------------------------------------------------------
// Gram matrix of <-,-> over a finite field

struct GramCertificate {
  Matrix<FiniteField> matrix;
  std::size_t rank = 0;
  bool nondegenerate = false;
};

inline constexpr std::size_t kDefaultGramCap = 2000;

inline GramCertificate gram_matrix(const SkewAlgebra<FiniteField>& a, unsigned threads = 1,
                                   std::size_t cap = kDefaultGramCap) {
  const std::size_t d = a.dimension();
  if (d > cap) throw DimensionBudget("Gram matrix of dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  const FiniteField& f = a.field();
  const FiniteField prime(f.p(), 1);
  Matrix<FiniteField> g(prime, d, d);
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = 0; j < d; ++j) g(i, j) = prime.from_int(a.basis_pairing(i, j));
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(d)));
  if (threads == 1) {
    fill(0, d);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (d + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(d, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  GramCertificate cert{g, rank(g), false};
  cert.nondegenerate = cert.rank == d;
  return cert;
}

/// For nonzero alpha, an element beta with <beta, alpha> != 0: with f the
/// smallest monomial of alpha and g = Delta / f, g alpha = sum c_s Delta s;
/// take beta = s0^{-1} g for the first s0 with c_s0 != 0.
template <Field F>
SkewVector<F> nondegeneracy_witness(const SkewAlgebra<F>& a, const SkewVector<F>& alpha) {
  a.check(alpha);
  std::size_t first = alpha.size();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!a.field().is_zero(alpha[i])) {
      first = i;
      break;
    }
  if (first == alpha.size()) throw InvalidArgument("nondegeneracy_witness: zero element");
  const std::size_t n = a.n();
  const Exponents& fm = a.ring().monomial(a.monomial_of(first));
  Exponents gm(n);
  for (std::size_t j = 0; j < n; ++j) gm[j] = static_cast<std::uint8_t>(n - 1 - j - fm[j]);
  const auto g = a.basis_vector(a.index(a.ring().index_of(gm), 0));
  const auto galpha = a.multiply(g, alpha);
  for (std::size_t s = 0; s < a.group().order(); ++s) {
    if (a.field().is_zero(galpha[a.index(a.ring().delta_index(), s)])) continue;
    return a.multiply(a.group_element(a.group().inverse_index(s)), g);
  }
  throw InvalidArgument("nondegeneracy_witness: g * alpha has no Delta component");
}

/// Checks <ab, c> = <a, bc> on random triples.
template <Field F>
bool associativity_check(const SkewAlgebra<F>& a, std::size_t samples, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.dimension() - 1);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  auto random_element = [&] {
    auto v = a.zero();
    for (int t = 0; t < 3; ++t) v[pick(rng)] = a.field().from_int(coef(rng));
    return v;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = random_element(), y = random_element(), z = random_element();
    if (!a.field().equal(a.pairing(a.multiply(x, y), z), a.pairing(x, a.multiply(y, z)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Projectives and socles

template <Field F>
bool is_idempotent(const SkewAlgebra<F>& a, const SkewVector<F>& e) {
  return a.equal(a.multiply(e, e), e);
}

/// Basis (echelon rows) of the left ideal A e for a degree-0 idempotent e.
template <Field F>
Subspace<F> projective_of(const SkewAlgebra<F>& a, const SkewVector<F>& e) {
  a.check(e);
  if (!a.is_homogeneous(e, 0)) throw InvalidArgument("projective_of: idempotent must lie in the degree-0 part");
  if (!is_idempotent(a, e)) throw NotIdempotent("projective_of: e * e != e");
  Subspace<F> s(a.field(), a.dimension());
  for (std::size_t b = 0; b < a.dimension(); ++b) s.insert(a.multiply(a.basis_vector(b), e));
  return s;
}

struct SimpleLabel {
  std::size_t index = 0;
  std::size_t dim = 0;
};

/// The coinvariant algebra as a kH-module: column j of the matrix of sigma
/// holds the coordinates of sigma . (basis monomial j).
inline MatModule coinvariant_module(std::size_t n, const PermutationGroup& h, const FiniteField& f) {
  const auto ring = coinvariant_ring(n);
  std::vector<FFMatrix> gens;
  for (const auto& s : h.generators()) {
    FFMatrix m(f, ring->dimension(), ring->dimension());
    for (std::size_t j = 0; j < ring->dimension(); ++j)
      for (const auto& [k, c] : ring->permute(s, j)) m(k, j) = f.from_int(c);
    gens.push_back(std::move(m));
  }
  return MatModule(f, ring->dimension(), std::move(gens));
}

/// C (x) S as a kH-module with diagonal action.
inline MatModule coinvariant_tensor(std::size_t n, const PermutationGroup& h, const MatModule& s) {
  return tensor(coinvariant_module(n, h, s.field()), s);
}

/// H acting on the left of the whole skew group algebra.
inline MatModule left_regular_H_module(const SkewAlgebra<FiniteField>& a) {
  std::vector<FFMatrix> gens;
  const std::size_t d = a.dimension();
  for (std::size_t gi : a.group().generator_indices()) {
    FFMatrix m(a.field(), d, d);
    const auto g = a.group_element(gi);
    for (std::size_t j = 0; j < d; ++j) {
      const auto col = a.multiply(g, a.basis_vector(j));
      for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
    }
    gens.push_back(std::move(m));
  }
  return MatModule(a.field(), d, std::move(gens));
}

/// Isomorphism type of soc(A e) among `simples`. Only defined when kH is
/// semisimple: then the radical of A is the positive-degree part, and the
/// socle is the joint kernel of left multiplication by x_1..x_n.
inline SimpleLabel socle_type(const SkewAlgebra<FiniteField>& a, const SkewVector<FiniteField>& e,
                              const std::vector<MatModule>& simples, std::uint64_t seed = 0) {
  const auto& f = a.field();
  if (!a.group().is_p_prime(f.p()))
    throw RadicalUnknown("socle_type: H is not a p'-group, the radical is not the positive-degree part");
  const auto proj = projective_of(a, e);
  const std::size_t r = proj.dim();
  std::vector<SkewVector<FiniteField>> xs;
  for (std::size_t i = 0; i < a.n(); ++i) {
    Exponents x(a.n(), 0);
    x[i] = 1;
    IntPolynomial p;
    p.n = a.n();
    p.terms[x] = 1;
    xs.push_back(a.from_coinvariant(normal_form(p, f)));
  }
  // Columns: x_i * w_j stacked over i.
  FFMatrix sys(f, xs.size() * a.dimension(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto img = a.multiply(xs[i], proj.basis()[j]);
      for (std::size_t k = 0; k < img.size(); ++k) sys(i * a.dimension() + k, j) = img[k];
    }
  const auto ker = nullspace(sys);
  Subspace<FiniteField> soc(f, a.dimension());
  for (std::size_t t = 0; t < ker.rows(); ++t) {
    auto v = a.zero();
    for (std::size_t j = 0; j < r; ++j) v = a.add(v, a.scale(ker(t, j), proj.basis()[j]));
    soc.insert(v);
  }
  std::vector<FFMatrix> gens;
  for (std::size_t gi : a.group().generator_indices()) {
    FFMatrix m(f, soc.dim(), soc.dim());
    for (std::size_t j = 0; j < soc.dim(); ++j) {
      const auto c = soc.coordinates(a.multiply(a.group_element(gi), soc.basis()[j]));
      for (std::size_t i = 0; i < soc.dim(); ++i) m(i, j) = c[i];
    }
    gens.push_back(std::move(m));
  }
  const MatModule sm(f, soc.dim(), std::move(gens));
  if (!is_irreducible(sm, seed).irreducible) throw InvalidArgument("socle_type: socle is not simple; e is not primitive");
  return {identify_simple(sm, simples), sm.dim()};
}

// ---------------------------------------------------------------------------
// Idempotents of kH

/// Roots of x^m - 1 in f, sorted by code.
inline std::vector<FiniteField::value_type> roots_of_unity(const FiniteField& f, std::uint64_t m) {
  std::vector<FiniteField::value_type> c(m + 1, f.zero());
  c[0] = f.neg(f.one());
  c[m] = f.one();
  std::vector<FiniteField::value_type> out;
  for (const auto& [fac, mult] : factor_univariate(Poly<FiniteField>(f, c)))
    if (fac.degree() == 1) out.push_back(f.neg(fac.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

/// All homomorphisms H -> f^*, as value tables indexed like h.elements().
/// Trivial character first, then lexicographic in the generator values.
inline std::vector<std::vector<FiniteField::value_type>> linear_characters(const PermutationGroup& h,
                                                                           const FiniteField& f) {
  const auto gi = h.generator_indices();
  std::vector<std::vector<FiniteField::value_type>> choices;
  for (const auto& g : h.generators()) choices.push_back(roots_of_unity(f, g.order()));
  std::vector<std::vector<FiniteField::value_type>> out;
  std::vector<std::size_t> pick(gi.size(), 0);
  for (;;) {
    std::vector<std::optional<FiniteField::value_type>> chi(h.order());
    chi[0] = f.one();
    std::vector<std::size_t> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q)
      for (std::size_t k = 0; k < gi.size() && ok; ++k) {
        const std::size_t t = h.product_index(gi[k], queue[q]);
        const auto v = f.mul(choices[k][pick[k]], *chi[queue[q]]);
        if (!chi[t]) {
          chi[t] = v;
          queue.push_back(t);
        } else if (*chi[t] != v) {
          ok = false;
        }
      }
    if (ok) {
      std::vector<FiniteField::value_type> row;
      for (auto& x : chi) row.push_back(*x);
      out.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const bool ta = std::all_of(a.begin(), a.end(), [&](auto x) { return x == f.one(); });
    const bool tb = std::all_of(b.begin(), b.end(), [&](auto x) { return x == f.one(); });
    if (ta != tb) return ta;
    for (std::size_t g : gi)
      if (a[g] != b[g]) return a[g] < b[g];
    return false;
  });
  return out;
}

/// Complete set of primitive orthogonal idempotents of kH, as kH vectors.
/// Built in for abelian p'-groups (character idempotents, requiring f to
/// contain the exponent-th roots of unity) and for p-groups (kH is local).
inline std::vector<Vec<FiniteField>> group_algebra_idempotents(const PermutationGroup& h, const FiniteField& f) {
  const std::uint64_t p = f.p();
  if (p_prime_part(h.order(), p) == 1) {
    Vec<FiniteField> one(h.order(), f.zero());
    one[0] = f.one();
    return {one};
  }
  if (!h.is_p_prime(p) || !h.is_abelian())
    throw IdempotentsUnavailable("built-in idempotents exist only for abelian p'-groups and p-groups; supply them");
  const auto chars = linear_characters(h, f);
  if (chars.size() != h.order()) throw NotSplit("field lacks the roots of unity needed for the characters of H");
  const auto inv_order = f.inv(f.from_int(static_cast<std::int64_t>(h.order())));
  std::vector<Vec<FiniteField>> out;
  for (const auto& chi : chars) {
    Vec<FiniteField> e(h.order());
    for (std::size_t s = 0; s < h.order(); ++s) e[s] = f.mul(inv_order, chi[h.inverse_index(s)]);
    out.push_back(std::move(e));
  }
  return out;
}

/// Checks e_i e_j = delta_ij e_i and sum e_i = 1 for user-supplied kH idempotents.
template <Field F>
void verify_idempotent_system(const SkewAlgebra<F>& a, const std::vector<SkewVector<F>>& es) {
  auto sum = a.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum = a.add(sum, es[i]);
    for (std::size_t j = 0; j < es.size(); ++j) {
      const auto prod = a.multiply(es[i], es[j]);
      if (i == j ? !a.equal(prod, es[i]) : !a.is_zero(prod))
        throw NotIdempotent("supplied idempotents are not orthogonal idempotents");
    }
  }
  if (!a.equal(sum, a.one())) throw NotIdempotent("supplied idempotents do not sum to 1");
}

}  // namespace tautilt

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/arith/finite_field.hpp"
#include "tautilt/arith/quadratic_form.hpp"
#include "tautilt/chop/module.hpp"
#include "tautilt/perm/group.hpp"
#include "tautilt/skew/skew_algebra.hpp"

namespace tautilt {

// ---------------------------------------------------------------------------
// Cartan-matrix screens

enum class ScreenOutcome { TauTiltingInfinite, NotGTame, Inconclusive };

inline std::string to_string(ScreenOutcome v) {
  switch (v) {
    case ScreenOutcome::TauTiltingInfinite: return "TauTiltingInfinite";
    case ScreenOutcome::NotGTame: return "NotGTame";
    case ScreenOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct ScreenVerdict {
  ScreenOutcome verdict = ScreenOutcome::Inconclusive;
  bool tau_tilting_infinite = false;
  bool not_g_tame = false;
  std::optional<IntegerVector> witness;
  std::string justification;
};

/// Integer vector with v^T M v < 0, or nullopt when M is positive semidefinite.
inline std::optional<IntegerVector> negative_integer_vector(const SymmetricIntegerMatrix& m) {
  const auto c = diagonalize(m);
  for (std::size_t k = 0; k < m.size(); ++k)
    if (sgn(c.diagonal[k]) < 0) return primitive_integer_vector(c.transform.col(k));
  return std::nullopt;
}

inline bool is_invariant(const IntegerVector& v, const Permutation& nu) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[nu(i)] != v[i]) return false;
  return true;
}

/// For a weakly symmetric algebra: a positive definite Cartan matrix is
/// necessary for tau-tilting finiteness, a positive semidefinite one for
/// g-tameness.
inline ScreenVerdict weakly_symmetric_screen(const SymmetricIntegerMatrix& c) {
  ScreenVerdict out;
  if (auto neg = negative_integer_vector(c)) {
    out.verdict = ScreenOutcome::NotGTame;
    out.tau_tilting_infinite = out.not_g_tame = true;
    out.witness = std::move(neg);
    out.justification = "Cartan matrix is not positive semidefinite";
  } else if (auto w = isotropic_or_negative_integer_vector(c)) {
    out.verdict = ScreenOutcome::TauTiltingInfinite;
    out.tau_tilting_infinite = true;
    out.witness = std::move(w);
    out.justification = "Cartan matrix is not positive definite";
  } else {
    out.justification = "Cartan matrix is positive definite; the screen is not a criterion for finiteness";
    return out;
  }
  if (sgn(c.quadratic_value(*out.witness)) > 0) throw ApproximationFailure("screen witness has positive value");
  return out;
}

/// Restriction of the form to nu-invariant vectors, in the basis of
/// orbit-sum vectors. `orbits` receives the orbits in order of their
/// smallest element.
inline SymmetricIntegerMatrix fold(const SymmetricIntegerMatrix& c, const Permutation& nu,
                                   std::vector<std::vector<std::size_t>>* orbits = nullptr) {
  if (nu.degree() != c.size()) throw InvalidArgument("Nakayama permutation has wrong degree");
  std::vector<std::vector<std::size_t>> orb;
  std::vector<bool> seen(c.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> o;
    for (std::size_t j = i; !seen[j]; j = nu(j)) {
      seen[j] = true;
      o.push_back(j);
    }
    std::sort(o.begin(), o.end());
    orb.push_back(std::move(o));
  }
  std::vector<std::vector<std::int64_t>> f(orb.size(), std::vector<std::int64_t>(orb.size(), 0));
  for (std::size_t a = 0; a < orb.size(); ++a)
    for (std::size_t b = 0; b < orb.size(); ++b)
      for (auto i : orb[a])
        for (auto j : orb[b]) f[a][b] = checked_add(f[a][b], c(i, j));
  if (orbits) *orbits = orb;
  return SymmetricIntegerMatrix(std::move(f));
}

/// Expands a vector on orbit sums to a nu-invariant vector.
inline IntegerVector unfold(const IntegerVector& w, const std::vector<std::vector<std::size_t>>& orbits, std::size_t t) {
  IntegerVector v(t, 0);
  for (std::size_t a = 0; a < orbits.size(); ++a)
    for (auto i : orbits[a]) v[i] = w[a];
  return v;
}

/// For a selfinjective algebra with Nakayama permutation nu: a nonzero
/// nu-invariant v with v^T C v <= 0 forces tau-tilting infiniteness.
inline ScreenVerdict selfinjective_screen(const SymmetricIntegerMatrix& c, const Permutation& nu) {
  std::vector<std::vector<std::size_t>> orbits;
  const auto folded = fold(c, nu, &orbits);
  ScreenVerdict out;
  const auto w = isotropic_or_negative_integer_vector(folded);
  if (!w) {
    out.justification = "folded Cartan form is positive definite on nu-invariant vectors";
    return out;
  }
  auto v = unfold(*w, orbits, c.size());
  if (sgn(c.quadratic_value(v)) > 0 || !is_invariant(v, nu))
    throw ApproximationFailure("lifted witness failed verification");
  out.verdict = ScreenOutcome::TauTiltingInfinite;
  out.tau_tilting_infinite = true;
  out.witness = std::move(v);
  out.justification = "nu-invariant vector with non-positive Cartan value";
  return out;
}

// ---------------------------------------------------------------------------
// Cartan matrix of the skew group algebra over the coinvariant algebra

struct CartanReport {
  FiniteField field;
  std::vector<MatModule> simples;          // canonical label order
  std::vector<std::size_t> dims;           // dim S_lambda = dim P_lambda (H a p'-group)
  std::vector<std::size_t> twist;          // lambda -> lambda*
  SymmetricIntegerMatrix matrix;
};

namespace detail {
inline void require_p_prime(const PermutationGroup& h, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (!h.is_p_prime(p))
    throw NotPPrimeGroup("|H| = " + std::to_string(h.order()) + " is divisible by " + std::to_string(p));
}
}  // namespace detail

/// Entry (lambda, mu) = (S_n : H) dim P_lambda dim P_mu, with simples found
/// by chopping the regular module over the splitting field.
inline CartanReport cartan_formula(std::size_t n, const PermutationGroup& h, std::uint32_t p, std::uint64_t seed = 0) {
  if (h.degree() != n) throw InvalidArgument("group degree differs from n");
  detail::require_p_prime(h, p);
  CartanReport r{splitting_field_for(h.exponent(), p), {}, {}, {}, {}};
  r.simples = simple_modules(h, r.field, seed);
  for (const auto& s : r.simples) r.dims.push_back(s.dim());
  r.twist = sign_twist(r.simples, h);
  const auto index = static_cast<std::int64_t>(h.index_in_symmetric());
  std::vector<std::vector<std::int64_t>> c(r.dims.size(), std::vector<std::int64_t>(r.dims.size()));
  for (std::size_t i = 0; i < r.dims.size(); ++i)
    for (std::size_t j = 0; j < r.dims.size(); ++j)
      c[i][j] = checked_mul(index, checked_mul(static_cast<std::int64_t>(r.dims[i]), static_cast<std::int64_t>(r.dims[j])));
  r.matrix = SymmetricIntegerMatrix(std::move(c));
  return r;
}

/// Independent route: entry (lambda, mu) = dim Hom_kH(S_lambda, C (x) S_mu).
inline SymmetricIntegerMatrix cartan_via_chop(std::size_t n, const PermutationGroup& h, const CartanReport& r) {
  const std::size_t t = r.simples.size();
  std::vector<std::vector<std::int64_t>> c(t, std::vector<std::int64_t>(t));
  for (std::size_t mu = 0; mu < t; ++mu) {
    const auto target = coinvariant_tensor(n, h, r.simples[mu]);
    for (std::size_t lambda = 0; lambda < t; ++lambda)
      c[lambda][mu] = static_cast<std::int64_t>(hom_dimension(r.simples[lambda], target));
  }
  return SymmetricIntegerMatrix(std::move(c));
}

/// The involution lambda -> lambda* as a permutation of labels.
inline Permutation nakayama_permutation(const CartanReport& r) {
  std::vector<std::uint16_t> img(r.twist.begin(), r.twist.end());
  return Permutation(std::move(img));
}

struct Main0Witness {
  std::size_t lambda = 0, mu = 0;
  IntegerVector v;
};

/// v = dim P_mu (e_lambda + e_lambda*) - dim P_lambda (e_mu + e_mu*) for the
/// first pair lambda < mu with S_lambda, S_mu and S_sgn (x) S_lambda, S_mu
/// pairwise non-isomorphic; verified against C v = 0.
inline Main0Witness main0_witness(const CartanReport& r, std::uint32_t p) {
  const std::size_t t = r.simples.size();
  if (t < std::min<std::size_t>(p, 3))
    throw NotApplicable("#IBr H = " + std::to_string(t) + " < min{p,3}");
  for (std::size_t lambda = 0; lambda < t; ++lambda)
    for (std::size_t mu = lambda + 1; mu < t; ++mu) {
      if (r.twist[lambda] == mu) continue;
      Main0Witness w{lambda, mu, IntegerVector(t, 0)};
      const auto dl = static_cast<std::int64_t>(r.dims[lambda]), dm = static_cast<std::int64_t>(r.dims[mu]);
      w.v[lambda] += dm;
      w.v[r.twist[lambda]] += dm;
      w.v[mu] -= dl;
      w.v[r.twist[mu]] -= dl;
      if (std::all_of(w.v.begin(), w.v.end(), [](auto x) { return x == 0; }))
        throw ApproximationFailure("main0 witness vanished");
      if (!is_invariant(w.v, nakayama_permutation(r))) throw ApproximationFailure("main0 witness is not *-invariant");
      for (const auto& x : r.matrix.apply(w.v))
        if (x != 0) throw ApproximationFailure("main0 witness is not in the kernel of the Cartan matrix");
      return w;
    }
  throw NotApplicable("no pair of simples with S_lambda, S_mu, S_lambda* pairwise distinct");
}

inline Main0Witness main0_witness(std::size_t n, const PermutationGroup& h, std::uint32_t p, std::uint64_t seed = 0) {
  return main0_witness(cartan_formula(n, h, p, seed), p);
}

// ---------------------------------------------------------------------------
// Verdict for k[(Z/mZ)^n x| H]

enum class Finiteness { Finite, Infinite, Unknown };

inline std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "Finite";
    case Finiteness::Infinite: return "Infinite";
    case Finiteness::Unknown: return "Unknown";
  }
  return "?";
}

struct GroupAlgebraVerdict {
  Finiteness verdict = Finiteness::Unknown;
  std::string rule = "unknown";  // semisimple | Prop-2.15a | Thm-main2 | Cor-main1 | unknown
  std::uint32_t p = 0;
  std::uint64_t m = 0;
  std::size_t n = 0;
  unsigned l = 0;
  bool p_prime_group = false;
  std::optional<HyperfocalReport> hyperfocal;
  std::size_t ibr = 0;
  bool pl_ge_n = false;
  IntegerVector witness;
};

inline GroupAlgebraVerdict decide(std::uint32_t p, std::uint64_t m, std::size_t n, const PermutationGroup& h,
                                  std::uint64_t seed = 0) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (m == 0) throw InvalidArgument("m must be >= 1");
  if (h.degree() != n) throw InvalidArgument("group degree differs from n");
  GroupAlgebraVerdict v;
  v.p = p;
  v.m = m;
  v.n = n;
  v.l = p_valuation(m, p);
  v.p_prime_group = h.is_p_prime(p);
  v.ibr = h.p_regular_class_count(p);
  std::uint64_t pl = 1;
  for (unsigned i = 0; i < v.l && pl < n; ++i) pl *= p;
  v.pl_ge_n = pl >= n;

  if (v.p_prime_group) {
    v.hyperfocal = h.hyperfocal_rank(p, m);
    if (v.l == 0) {
      v.verdict = Finiteness::Finite;
      v.rule = "semisimple";
    } else if (v.hyperfocal->rank <= 1) {
      v.verdict = Finiteness::Finite;
      v.rule = v.pl_ge_n ? "Thm-main2" : "Prop-2.15a";
    } else if (v.pl_ge_n) {
      v.verdict = Finiteness::Infinite;
      v.rule = "Thm-main2";
    }
  } else if (v.pl_ge_n && v.ibr >= std::min<std::size_t>(p, 3)) {
    v.verdict = Finiteness::Infinite;
    v.rule = "Cor-main1";
  }
  if (v.verdict == Finiteness::Infinite && v.p_prime_group && v.ibr >= std::min<std::size_t>(p, 3))
    v.witness = main0_witness(n, h, p, seed).v;
  return v;
}

/// Exit status of the decide command.
inline int exit_code(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return 0;
    case Finiteness::Infinite: return 1;
    case Finiteness::Unknown: return 2;
  }
  return 2;
}

}  // namespace tautilt

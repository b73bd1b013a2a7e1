#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/arith/finite_field.hpp"
#include "tautilt/error.hpp"

namespace tautilt {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <Field F>
class Poly {
 public:
  using value_type = typename F::value_type;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const F& field, std::size_t degree, value_type coeff) {
    std::vector<value_type> c(degree + 1, field.zero());
    c[degree] = coeff;
    return Poly(field, std::move(c));
  }
  static Poly x(const F& field) { return monomial(field, 1, field.one()); }
  static Poly constant(const F& field, value_type c) { return Poly(field, {c}); }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<value_type>& coeffs() const { return c_; }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  value_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  value_type operator()(const value_type& x) const {
    value_type r = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const value_type li = field_.inv(leading());
    std::vector<value_type> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], li);
    return Poly(field_, std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    std::vector<value_type> c(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    std::vector<value_type> c(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<value_type> c(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
    const auto& f = field_;
    std::vector<value_type> r = c_;
    if (r.size() < d.c_.size()) return {Poly(f), *this};
    std::vector<value_type> q(r.size() - d.c_.size() + 1, f.zero());
    const value_type li = f.inv(d.leading());
    for (std::size_t k = q.size(); k-- > 0;) {
      const value_type coef = f.mul(r[k + d.c_.size() - 1], li);
      q[k] = coef;
      if (f.is_zero(coef)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(coef, d.c_[j]));
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<value_type> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
    return Poly(field_, std::move(c));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (field_.is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += field_.to_string(c_[i]);
      if (i >= 1) s += "*x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<value_type> c_;
};

template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <Field F>
Poly<F> powmod(Poly<F> base, std::uint64_t e, const Poly<F>& mod) {
  Poly<F> r = Poly<F>::constant(base.field(), base.field().one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

/// base^(q^j) mod `mod` by repeated q-th powering.
inline Poly<FiniteField> frobenius_power(const Poly<FiniteField>& base, unsigned j, const Poly<FiniteField>& mod) {
  Poly<FiniteField> r = base % mod;
  for (unsigned i = 0; i < j; ++i) r = powmod(r, base.field().order(), mod);
  return r;
}

/// Rabin's test over F_q.
inline bool is_irreducible(const Poly<FiniteField>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const unsigned d = static_cast<unsigned>(f.degree());
  const auto& F = f.field();
  const Poly<FiniteField> x = Poly<FiniteField>::x(F);
  if (!(frobenius_power(x, d, f) == x % f)) return false;
  for (auto r : prime_divisors(d)) {
    const Poly<FiniteField> h = frobenius_power(x, d / static_cast<unsigned>(r), f) - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

namespace detail {

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p).
inline Poly<FiniteField> pth_root(const Poly<FiniteField>& f) {
  const auto& F = f.field();
  const std::uint32_t p = F.p();
  // a^(1/p) = a^(q/p) in F_q.
  const std::uint64_t root_exp = F.order() / p;
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly<FiniteField>(F, std::move(c));
}

/// Square-free decomposition of a monic polynomial: pairs (g, m) with
/// f = prod g^m, g square-free and pairwise coprime.
inline std::vector<std::pair<Poly<FiniteField>, unsigned>> squarefree(const Poly<FiniteField>& f) {
  std::vector<std::pair<Poly<FiniteField>, unsigned>> out;
  if (f.degree() < 1) return out;
  const auto& F = f.field();
  const unsigned p = F.p();
  Poly<FiniteField> c = gcd(f, f.derivative());
  Poly<FiniteField> w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly<FiniteField> y = gcd(w, c);
    Poly<FiniteField> z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree(pth_root(c.monic()))) out.emplace_back(g, m * p);
  }
  return out;
}

/// Distinct-degree factorisation of a monic square-free polynomial.
inline std::vector<std::pair<Poly<FiniteField>, unsigned>> distinct_degree(Poly<FiniteField> f) {
  std::vector<std::pair<Poly<FiniteField>, unsigned>> out;
  const auto& F = f.field();
  const Poly<FiniteField> x = Poly<FiniteField>::x(F);
  Poly<FiniteField> h = x % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max<long>(f.degree(), 0)); ++d) {
    h = powmod(h, F.order(), f);
    Poly<FiniteField> g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
inline void equal_degree(const Poly<FiniteField>& f, unsigned d, std::mt19937_64& rng,
                         std::vector<Poly<FiniteField>>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  const auto& F = f.field();
  const unsigned n = static_cast<unsigned>(f.degree());
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
  for (;;) {
    std::vector<std::uint32_t> c(n);
    for (auto& v : c) v = pick(rng);
    Poly<FiniteField> a(F, std::move(c));
    if (a.degree() < 1) continue;
    Poly<FiniteField> b(F);
    if (F.p() == 2) {
      // Absolute trace map a + a^2 + ... + a^(2^(k d - 1)) mod f.
      const unsigned steps = F.degree() * d;
      Poly<FiniteField> term = a % f;
      b = term;
      for (unsigned i = 1; i < steps; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      std::uint64_t e = 1;
      for (unsigned i = 0; i < d; ++i) e *= F.order();
      b = powmod(a, (e - 1) / 2, f) - Poly<FiniteField>::constant(F, F.one());
    }
    Poly<FiniteField> g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorisation over F_q into monic irreducibles with
/// multiplicities; the leading coefficient of `f` is the omitted unit.
/// Output is sorted by (degree, coefficients) so it is reproducible.
inline std::vector<std::pair<Poly<FiniteField>, unsigned>> factor_univariate(const Poly<FiniteField>& f) {
  if (f.is_zero()) throw InvalidArgument("factor_univariate: zero polynomial");
  std::vector<std::pair<Poly<FiniteField>, unsigned>> out;
  std::mt19937_64 rng(0x7a75u);
  for (auto& [sqf, mult] : detail::squarefree(f.monic())) {
    for (auto& [part, d] : detail::distinct_degree(sqf)) {
      std::vector<Poly<FiniteField>> irr;
      detail::equal_degree(part, d, rng, irr);
      for (auto& g : irr) out.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  // Merge equal factors arising from different square-free layers.
  std::vector<std::pair<Poly<FiniteField>, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  return merged;
}

}  // namespace tautilt

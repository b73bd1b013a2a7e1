#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/arith/number_theory.hpp"
#include "tautilt/error.hpp"

namespace tautilt {

/// F_q with q = p^k, realised as F_p[t]/(modulus). An element is encoded as
/// the integer sum c_i p^i of its coefficient vector in the power basis, so
/// the prime subfield is {0, ..., p-1} with its usual integer labels.
///
/// Multiplication goes through discrete log tables; the field object is a
/// shared handle to immutable tables.
class FiniteField {
 public:
  using value_type = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  FiniteField() : FiniteField(2, 1) {}

  /// Picks the first monic irreducible of degree k (coefficients ordered
  /// by their integer encoding).
  FiniteField(std::uint32_t p, unsigned k) {
    check_params(p, k);
    std::vector<std::uint32_t> mod(k + 1, 0);
    mod[k] = 1;
    if (k == 1) {
      build(p, mod);
      return;
    }
    const std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        mod[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (mod[0] != 0 && is_irreducible_over_prime(mod, p)) {
        build(p, mod);
        return;
      }
    }
    throw InvalidArgument("no irreducible polynomial found");  // unreachable
  }

  /// Explicit modulus (low-to-high coefficients, monic); irreducibility is
  /// certified by trial division.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
    check_params(p, static_cast<unsigned>(modulus.size() - 1));
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
    if (!is_irreducible_over_prime(modulus, p)) throw InvalidArgument("modulus is reducible");
    build(p, modulus);
  }

  std::uint32_t p() const { return t_->p; }
  unsigned degree() const { return t_->k; }
  std::uint32_t order() const { return t_->q; }
  std::uint64_t characteristic() const { return t_->p; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  bool is_prime_field() const { return t_->k == 1; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const {
    const std::int64_t p = t_->p;
    return static_cast<value_type>(((n % p) + p) % p);
  }
  /// Validates an integer encoding read from external input.
  value_type from_code(std::int64_t code) const {
    if (code < 0 || code >= static_cast<std::int64_t>(t_->q))
      throw InvalidArgument("field element code " + std::to_string(code) + " out of range");
    return static_cast<value_type>(code);
  }

  value_type add(value_type a, value_type b) const {
    const auto& t = *t_;
    if (t.k == 1) {
      const std::uint32_t s = a + b;
      return s >= t.p ? s - t.p : s;
    }
    if (t.p == 2) return a ^ b;
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < t.k; ++i) {
      r += ((a % t.p + b % t.p) % t.p) * scale;
      a /= t.p;
      b /= t.p;
      scale *= t.p;
    }
    return r;
  }
  value_type neg(value_type a) const {
    const auto& t = *t_;
    if (t.p == 2) return a;
    if (t.k == 1) return a == 0 ? 0 : t.p - a;
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < t.k; ++i) {
      r += ((t.p - a % t.p) % t.p) * scale;
      a /= t.p;
      scale *= t.p;
    }
    return r;
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    const auto& t = *t_;
    return t.exp[t.log[a] + t.log[b]];
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InvalidArgument("inverse of zero in finite field");
    const auto& t = *t_;
    return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto& t = *t_;
    return t.exp[(static_cast<std::uint64_t>(t.log[a]) * (e % (t.q - 1))) % (t.q - 1)];
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  /// A fixed generator of the multiplicative group.
  value_type primitive_element() const { return t_->exp[1]; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(value_type a) const {
    if (a == 0) throw InvalidArgument("order of zero");
    const std::uint64_t n = t_->q - 1;
    return n / std::gcd<std::uint64_t, std::uint64_t>(n, t_->log[a]);
  }

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // log[0] unused
  };

  static void check_params(std::uint32_t p, unsigned k) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw InvalidArgument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) throw InvalidArgument("field order exceeds supported maximum 2^20");
    }
  }

  // Polynomials over F_p as coefficient vectors, low to high.
  using PrimePoly = std::vector<std::uint32_t>;

  static void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  static std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  static PrimePoly rem_prime(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
      trim(a);
    }
    return a;
  }

  /// Trial division by every monic polynomial of degree <= deg/2.
  static bool is_irreducible_over_prime(const PrimePoly& f, std::uint32_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    for (unsigned d = 1; d <= k / 2; ++d) {
      const std::uint64_t count = checked_pow(p, d);
      PrimePoly g(d + 1, 0);
      g[d] = 1;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        if (rem_prime(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  static std::uint32_t encode(const PrimePoly& a, std::uint32_t p) {
    std::uint32_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
    return r;
  }
  static PrimePoly decode(std::uint32_t a, std::uint32_t p, unsigned k) {
    PrimePoly r(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      r[i] = a % p;
      a /= p;
    }
    return r;
  }
  static std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const PrimePoly& mod) {
    const unsigned k = static_cast<unsigned>(mod.size() - 1);
    const PrimePoly x = decode(a, p, k), y = decode(b, p, k);
    PrimePoly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    PrimePoly r = rem_prime(prod, mod, p);
    r.resize(k, 0);
    return encode(r, p);
  }

  void build(std::uint32_t p, const PrimePoly& mod) {
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = static_cast<unsigned>(mod.size() - 1);
    t->modulus = mod;
    t->q = static_cast<std::uint32_t>(checked_pow(p, t->k));
    const std::uint32_t n = t->q - 1;
    t->exp.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    t->log.assign(t->q, 0);
    for (std::uint32_t g = (t->q == 2 ? 1 : 2); g < t->q; ++g) {
      std::uint32_t x = 1;
      std::uint32_t i = 0;
      bool ok = true;
      for (; i < n; ++i) {
        if (i > 0 && x == 1) {
          ok = false;
          break;
        }
        t->exp[i] = x;
        x = slow_mul(x, g, p, mod);
      }
      if (ok && x == 1) break;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      t->log[t->exp[i]] = i;
      t->exp[i + n] = t->exp[i];
    }
    t->exp[2 * static_cast<std::size_t>(n)] = t->exp[0];
    t_ = std::move(t);
  }

  std::shared_ptr<const Tables> t_;
};

static_assert(Field<FiniteField>);
static_assert(Field<RationalField>);

/// F_{p^k} with k minimal such that the p'-part of e divides p^k - 1.
inline FiniteField splitting_field_for(std::uint64_t group_exponent, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("splitting_field_for: p must be prime");
  if (group_exponent == 0) throw InvalidArgument("splitting_field_for: exponent must be >= 1");
  const std::uint64_t e = p_prime_part(group_exponent, p);
  return FiniteField(p, multiplicative_order(p, e));
}

}  // namespace tautilt

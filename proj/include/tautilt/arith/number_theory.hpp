#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tautilt/error.hpp"

namespace tautilt {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Exponent of p in n (n >= 1).
inline unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidArgument("p_valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// n with every factor p removed.
inline std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw Overflow("integer power overflows 64 bits");
  }
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition overflows 64 bits");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication overflows 64 bits");
  return r;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    if (__builtin_mul_overflow(r, std::uint64_t{i}, &r)) throw Overflow("factorial overflows 64 bits");
  return r;
}

/// Smallest k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1.
inline unsigned multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw InvalidArgument("multiplicative_order: not a unit");
  std::uint64_t x = a % n;
  unsigned k = 1;
  while (x != 1) {
    x = (x * (a % n)) % n;
    ++k;
  }
  return k;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace tautilt

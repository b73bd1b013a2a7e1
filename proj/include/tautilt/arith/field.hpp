#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tautilt {

using Rational = mpq_class;
using BigInt = mpz_class;

/// The scalar interface every algebraic container in the library is
/// templated on. Field objects are cheap to copy and compare.
template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, std::int64_t n) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(n) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// Q with GMP rationals (always canonical).
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t n) const {
    Rational r;
    r = BigInt(std::to_string(n));
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace tautilt

#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/arith/number_theory.hpp"
#include "tautilt/error.hpp"
#include "tautilt/perm/permutation.hpp"

namespace tautilt {

using Exponents = std::vector<std::uint8_t>;
/// Sparse integer combination of staircase basis indices, sorted by index.
using IntSparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Integer rewriting data for the coinvariant algebra k[x_1..x_n]/(E_1..E_n).
///
/// Staircase basis: x_1^{i_1}...x_n^{i_n} with i_j <= n-j. Rule j rewrites
/// x_j^{n-j+1} by the tail of the complete homogeneous polynomial
/// h_{n-j+1}(x_1..x_j); these form a Groebner basis for the lex order
/// x_n > ... > x_1, so the normal form is unique. All coefficients are
/// integers and specialise to any field.
///
/// Basis indices are mixed radix with x_1 most significant, which makes
/// index order the lexicographic order on exponent vectors: index 0 is 1
/// and the last index is Delta = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
class CoinvariantRing {
 public:
  static constexpr std::size_t kMaxN = 8;

  explicit CoinvariantRing(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxN) throw InvalidArgument("coinvariant algebra supports 1 <= n <= 8");
    top_degree_ = n * (n - 1) / 2;
    weight_.assign(n, 1);
    for (std::size_t j = n - 1; j-- > 0;) weight_[j] = weight_[j + 1] * (n - (j + 1));
    dim_ = factorial(static_cast<unsigned>(n));
    basis_.reserve(dim_);
    Exponents e(n, 0);
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      std::size_t r = idx;
      for (std::size_t j = 0; j < n; ++j) {
        e[j] = static_cast<std::uint8_t>(r / weight_[j]);
        r %= weight_[j];
      }
      basis_.push_back(e);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned r = static_cast<unsigned>(n - j);  // exponent of the leading term
      std::vector<Exponents> tail;
      Exponents t(n, 0);
      enumerate_degree(j, r, 0, t, tail);
      tails_.push_back(std::move(tail));
    }
  }

  std::size_t n() const { return n_; }
  std::size_t dimension() const { return dim_; }
  std::size_t top_degree() const { return top_degree_; }
  const std::vector<Exponents>& basis() const { return basis_; }
  const Exponents& monomial(std::size_t idx) const { return basis_[idx]; }
  std::size_t delta_index() const { return dim_ - 1; }
  std::size_t degree_of(std::size_t idx) const {
    std::size_t d = 0;
    for (auto x : basis_[idx]) d += x;
    return d;
  }

  bool is_staircase(const Exponents& e) const {
    if (e.size() != n_) return false;
    for (std::size_t j = 0; j < n_; ++j)
      if (e[j] > n_ - 1 - j) return false;
    return true;
  }
  std::size_t index_of(const Exponents& e) const {
    if (!is_staircase(e)) throw InvalidArgument("monomial is not in the staircase basis");
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n_; ++j) idx += e[j] * weight_[j];
    return idx;
  }

  /// Normal form of an arbitrary monomial.
  IntSparse normal_form(const Exponents& e) const {
    if (e.size() != n_) throw InvalidArgument("monomial has wrong number of variables");
    std::size_t deg = 0;
    for (auto x : e) deg += x;
    if (deg > top_degree_) return {};
    std::lock_guard lock(mu_);
    return nf_locked(e);
  }

  /// Normal form of the product of two basis monomials.
  IntSparse product(std::size_t i, std::size_t j) const {
    Exponents e(n_);
    for (std::size_t k = 0; k < n_; ++k) e[k] = static_cast<std::uint8_t>(basis_[i][k] + basis_[j][k]);
    return normal_form(e);
  }

  /// Normal form of sigma applied to a basis monomial, with the action
  /// x_k -> x_{sigma(k)} (a left action: (sigma tau) acts as sigma after tau).
  IntSparse permute(const Permutation& sigma, std::size_t idx) const {
    if (sigma.degree() != n_) throw InvalidArgument("permutation degree differs from n");
    Exponents e(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) e[sigma(k)] = basis_[idx][k];
    return normal_form(e);
  }

  /// Dimensions of the graded pieces; sums to n!.
  std::vector<std::size_t> hilbert_function() const {
    std::vector<std::size_t> h(top_degree_ + 1, 0);
    for (std::size_t i = 0; i < dim_; ++i) ++h[degree_of(i)];
    return h;
  }

  /// Trace of sigma on the coinvariant algebra over Q.
  std::int64_t trace_of_permutation(const Permutation& sigma) const {
    std::int64_t tr = 0;
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& [k, c] : permute(sigma, b))
        if (k == b) tr = checked_add(tr, c);
    return tr;
  }

  /// Coefficient of Delta in the product of two basis monomials.
  std::int64_t delta_coefficient_of_product(std::size_t i, std::size_t j) const {
    if (degree_of(i) + degree_of(j) != top_degree_) return 0;
    for (const auto& [k, c] : product(i, j))
      if (k == delta_index()) return c;
    return 0;
  }

 private:
  static std::uint64_t key(const Exponents& e) {
    std::uint64_t k = 0;
    for (auto x : e) k = (k << 6) | x;
    return k;
  }

  void enumerate_degree(std::size_t j, unsigned r, std::size_t var, Exponents& cur, std::vector<Exponents>& out) const {
    // Monomials of total degree r in x_0..x_j, excluding x_j^r.
    if (var == j) {
      if (r == n_ - j) return;  // that would be x_j^r itself
      cur[j] = static_cast<std::uint8_t>(r);
      out.push_back(cur);
      cur[j] = 0;
      return;
    }
    for (unsigned a = 0; a <= r; ++a) {
      cur[var] = static_cast<std::uint8_t>(a);
      enumerate_degree(j, r - a, var + 1, cur, out);
    }
    cur[var] = 0;
  }

  IntSparse nf_locked(const Exponents& e) const {
    std::size_t deg = 0;
    for (auto x : e) deg += x;
    if (deg > top_degree_) return {};
    std::size_t j = n_;
    for (std::size_t v = n_; v-- > 0;)
      if (e[v] > n_ - 1 - v) {
        j = v;
        break;
      }
    if (j == n_) return {{static_cast<std::uint32_t>(index_of(e)), 1}};
    const std::uint64_t k = key(e);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;

    Exponents rest = e;
    rest[j] = static_cast<std::uint8_t>(rest[j] - (n_ - j));
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& t : tails_[j]) {
      Exponents m = rest;
      for (std::size_t v = 0; v < n_; ++v) m[v] = static_cast<std::uint8_t>(m[v] + t[v]);
      for (const auto& [idx, c] : nf_locked(m)) acc[idx] = checked_add(acc[idx], -c);
    }
    IntSparse out;
    for (const auto& [idx, c] : acc)
      if (c != 0) out.emplace_back(idx, c);
    memo_.emplace(k, out);
    return out;
  }

  std::size_t n_;
  std::size_t top_degree_;
  std::size_t dim_;
  std::vector<std::size_t> weight_;
  std::vector<Exponents> basis_;
  std::vector<std::vector<Exponents>> tails_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, IntSparse> memo_;
};

/// Shared, lazily built ring for each n.
inline std::shared_ptr<const CoinvariantRing> coinvariant_ring(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const CoinvariantRing>> rings;
  std::lock_guard lock(mu);
  auto& slot = rings[n];
  if (!slot) slot = std::make_shared<const CoinvariantRing>(n);
  return slot;
}

/// Integer polynomial in x_1..x_n, as parsed from text.
struct IntPolynomial {
  std::size_t n = 0;
  std::map<Exponents, std::int64_t> terms;
};

/// Element of the coinvariant algebra over a field: sparse coefficients on
/// staircase indices, no stored zeros.
template <Field F>
class CoinvariantElement {
 public:
  using value_type = typename F::value_type;
  using Terms = std::vector<std::pair<std::uint32_t, value_type>>;

  CoinvariantElement(std::shared_ptr<const CoinvariantRing> ring, F field)
      : ring_(std::move(ring)), field_(std::move(field)) {}

  static CoinvariantElement basis_element(std::shared_ptr<const CoinvariantRing> ring, F field, std::size_t idx,
                                          value_type c) {
    CoinvariantElement e(std::move(ring), std::move(field));
    if (!e.field_.is_zero(c)) e.terms_.emplace_back(static_cast<std::uint32_t>(idx), c);
    return e;
  }
  static CoinvariantElement one(std::shared_ptr<const CoinvariantRing> ring, F field) {
    auto c = field.one();
    return basis_element(std::move(ring), std::move(field), 0, c);
  }
  static CoinvariantElement delta(std::shared_ptr<const CoinvariantRing> ring, F field) {
    const std::size_t d = ring->delta_index();
    auto c = field.one();
    return basis_element(std::move(ring), std::move(field), d, c);
  }
  static CoinvariantElement from_int_sparse(std::shared_ptr<const CoinvariantRing> ring, F field, const IntSparse& s) {
    CoinvariantElement e(std::move(ring), std::move(field));
    for (const auto& [idx, c] : s) {
      auto v = e.field_.from_int(c);
      if (!e.field_.is_zero(v)) e.terms_.emplace_back(idx, v);
    }
    return e;
  }

  const CoinvariantRing& ring() const { return *ring_; }
  const std::shared_ptr<const CoinvariantRing>& ring_ptr() const { return ring_; }
  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  value_type coefficient(std::size_t idx) const {
    for (const auto& [i, c] : terms_)
      if (i == idx) return c;
    return field_.zero();
  }

  friend CoinvariantElement operator+(const CoinvariantElement& a, const CoinvariantElement& b) {
    a.check_same(b);
    std::map<std::uint32_t, value_type> acc;
    for (const auto& [i, c] : a.terms_) acc.emplace(i, c);
    for (const auto& [i, c] : b.terms_) {
      auto [it, fresh] = acc.emplace(i, c);
      if (!fresh) it->second = a.field_.add(it->second, c);
    }
    return a.from_map(acc);
  }
  CoinvariantElement scaled(const value_type& s) const {
    CoinvariantElement r(ring_, field_);
    for (const auto& [i, c] : terms_) {
      auto v = field_.mul(c, s);
      if (!field_.is_zero(v)) r.terms_.emplace_back(i, v);
    }
    return r;
  }

  friend bool operator==(const CoinvariantElement& a, const CoinvariantElement& b) {
    if (a.ring_->n() != b.ring_->n() || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (a.terms_[k].first != b.terms_[k].first || !a.field_.equal(a.terms_[k].second, b.terms_[k].second))
        return false;
    return true;
  }

  /// Accumulates c * (integer combination) into a map; shared by the operations below.
  void accumulate(std::map<std::uint32_t, value_type>& acc, const value_type& c, const IntSparse& s) const {
    for (const auto& [idx, k] : s) {
      auto v = field_.mul(c, field_.from_int(k));
      auto [it, fresh] = acc.emplace(idx, v);
      if (!fresh) it->second = field_.add(it->second, v);
    }
  }
  CoinvariantElement from_map(const std::map<std::uint32_t, value_type>& acc) const {
    CoinvariantElement r(ring_, field_);
    for (const auto& [i, c] : acc)
      if (!field_.is_zero(c)) r.terms_.emplace_back(i, c);
    return r;
  }
  void check_same(const CoinvariantElement& o) const {
    if (ring_->n() != o.ring_->n()) throw InvalidArgument("coinvariant elements for different n");
    if (!(field_ == o.field_)) throw FieldMismatch("coinvariant elements over different fields");
  }

 private:
  std::shared_ptr<const CoinvariantRing> ring_;
  F field_;
  Terms terms_;
};

/// Normal form of an integer polynomial, specialised to the field.
template <Field F>
CoinvariantElement<F> normal_form(const IntPolynomial& poly, const F& field) {
  auto ring = coinvariant_ring(poly.n);
  CoinvariantElement<F> zero(ring, field);
  std::map<std::uint32_t, typename F::value_type> acc;
  for (const auto& [e, c] : poly.terms) zero.accumulate(acc, field.from_int(c), ring->normal_form(e));
  return zero.from_map(acc);
}

template <Field F>
CoinvariantElement<F> multiply(const CoinvariantElement<F>& a, const CoinvariantElement<F>& b) {
  a.check_same(b);
  const auto& f = a.field();
  std::map<std::uint32_t, typename F::value_type> acc;
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) a.accumulate(acc, f.mul(x, y), a.ring().product(i, j));
  return a.from_map(acc);
}

template <Field F>
CoinvariantElement<F> apply_permutation(const Permutation& sigma, const CoinvariantElement<F>& a) {
  if (sigma.degree() != a.ring().n()) throw InvalidArgument("permutation degree differs from n");
  std::map<std::uint32_t, typename F::value_type> acc;
  for (const auto& [i, x] : a.terms()) a.accumulate(acc, x, a.ring().permute(sigma, i));
  return a.from_map(acc);
}

/// Coefficient of Delta.
template <Field F>
typename F::value_type phi(const CoinvariantElement<F>& a) {
  return a.coefficient(a.ring().delta_index());
}

inline std::vector<std::size_t> hilbert_function(std::size_t n) { return coinvariant_ring(n)->hilbert_function(); }

inline std::int64_t trace_of_permutation(const Permutation& sigma, std::size_t n) {
  return coinvariant_ring(n)->trace_of_permutation(sigma);
}

/// "x1^2*x2 - 3*x3" style input with integer coefficients.
inline IntPolynomial parse_polynomial(const std::string& text, std::size_t n) {
  IntPolynomial poly;
  poly.n = n;
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::int64_t {
    std::int64_t v = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a number in: " + text);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = checked_add(checked_mul(v, 10), text[i] - '0');
      ++i;
    }
    return v;
  };
  ws();
  if (i == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    ws();
    if (i == text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in: " + text);
    }
    first = false;
    std::int64_t coeff = 1;
    Exponents e(n, 0);
    bool have_factor = false;
    while (true) {
      ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = checked_mul(coeff, number());
        have_factor = true;
      } else if (i < text.size() && text[i] == 'x') {
        ++i;
        const std::int64_t var = number();
        if (var < 1 || static_cast<std::size_t>(var) > n) throw ParseError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
        std::int64_t pw = 1;
        ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          ws();
          pw = number();
        }
        if (e[static_cast<std::size_t>(var - 1)] + pw > 255) throw ParseError("exponent too large");
        e[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(var - 1)] + pw);
        have_factor = true;
      } else {
        throw ParseError("unexpected input in polynomial: " + text);
      }
      ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term in: " + text);
    poly.terms[e] = checked_add(poly.terms[e], checked_mul(sign, coeff));
  }
  return poly;
}

inline std::string monomial_to_string(const Exponents& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(j + 1);
    if (e[j] > 1) s += "^" + std::to_string(e[j]);
  }
  return s.empty() ? "1" : s;
}

template <Field F>
std::string to_string(const CoinvariantElement<F>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += a.field().to_string(c) + "*" + monomial_to_string(a.ring().monomial(i));
  }
  return s;
}

}  // namespace tautilt

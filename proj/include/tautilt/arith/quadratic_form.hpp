#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/arith/matrix.hpp"
#include "tautilt/error.hpp"

namespace tautilt {

using IntegerVector = std::vector<std::int64_t>;

/// Exact symmetric integer matrix; symmetry is enforced at construction.
class SymmetricIntegerMatrix {
 public:
  SymmetricIntegerMatrix() = default;
  explicit SymmetricIntegerMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    const std::size_t t = rows_.size();
    for (std::size_t i = 0; i < t; ++i) {
      if (rows_[i].size() != t) throw InvalidArgument("matrix is not square");
      for (std::size_t j = 0; j < i; ++j)
        if (rows_[i][j] != rows_[j][i])
          throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  static SymmetricIntegerMatrix identity(std::size_t t) {
    std::vector<std::vector<std::int64_t>> r(t, std::vector<std::int64_t>(t, 0));
    for (std::size_t i = 0; i < t; ++i) r[i][i] = 1;
    return SymmetricIntegerMatrix(std::move(r));
  }
  static SymmetricIntegerMatrix diagonal(const std::vector<std::int64_t>& d) {
    std::vector<std::vector<std::int64_t>> r(d.size(), std::vector<std::int64_t>(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) r[i][i] = d[i];
    return SymmetricIntegerMatrix(std::move(r));
  }

  std::size_t size() const { return rows_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// v^T M v with exact (big integer) arithmetic.
  BigInt quadratic_value(const IntegerVector& v) const {
    if (v.size() != size()) throw InvalidArgument("quadratic_value: length mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) s += BigInt(static_cast<long>(rows_[i][j])) * v[i] * v[j];
    return s;
  }
  /// M v, exact.
  std::vector<BigInt> apply(const IntegerVector& v) const {
    std::vector<BigInt> out(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out[i] += BigInt(static_cast<long>(rows_[i][j])) * v[j];
    return out;
  }

  Matrix<RationalField> to_rational() const {
    RationalField q;
    Matrix<RationalField> m(q, size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = q.from_int(rows_[i][j]);
    return m;
  }

  friend bool operator==(const SymmetricIntegerMatrix&, const SymmetricIntegerMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Result of congruence diagonalisation: transform^T * M * transform = diag.
struct CongruenceCertificate {
  Signature signature;
  Matrix<RationalField> transform;  // B, columns are the new basis vectors
  std::vector<Rational> diagonal;
};

/// Lagrange reduction over Q. Zero pivots are repaired by pivot swaps or,
/// when the whole remaining diagonal vanishes, by the hyperbolic step
/// b_k <- b_k + b_j which turns an off-diagonal 2a into a diagonal entry.
inline CongruenceCertificate diagonalize(const SymmetricIntegerMatrix& m) {
  const std::size_t t = m.size();
  RationalField q;
  Matrix<RationalField> a = m.to_rational();
  Matrix<RationalField> b = Matrix<RationalField>::identity(q, t);

  // Congruence helpers: column op on b and the matching row+column op on a.
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < t; ++r) std::swap(b(r, i), b(r, j));
    for (std::size_t c = 0; c < t; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < t; ++r) std::swap(a(r, i), a(r, j));
  };
  auto add_basis = [&](std::size_t dst, std::size_t src, const Rational& s) {  // b_dst += s b_src
    for (std::size_t r = 0; r < t; ++r) b(r, dst) += s * b(r, src);
    for (std::size_t c = 0; c < t; ++c) a(dst, c) += s * a(src, c);
    for (std::size_t r = 0; r < t; ++r) a(r, dst) += s * a(r, src);
  };

  for (std::size_t k = 0; k < t; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < t && sgn(a(j, j)) == 0) ++j;
      if (j < t) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < t && sgn(a(k, j)) == 0) ++j;
        if (j == t) continue;  // row k is already zero
        add_basis(k, j, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t j = k + 1; j < t; ++j) {
      if (sgn(a(j, k)) == 0) continue;
      add_basis(j, k, -a(j, k) / pivot);
    }
  }

  CongruenceCertificate cert{{}, b, {}};
  for (std::size_t k = 0; k < t; ++k) {
    cert.diagonal.push_back(a(k, k));
    const int s = sgn(a(k, k));
    if (s > 0)
      ++cert.signature.positive;
    else if (s < 0)
      ++cert.signature.negative;
    else
      ++cert.signature.zero;
  }
  return cert;
}

inline Signature signature(const SymmetricIntegerMatrix& m) { return diagonalize(m).signature; }

/// Exact check that B^T M B equals the reported diagonal and B is invertible.
inline bool verify_certificate(const SymmetricIntegerMatrix& m, const CongruenceCertificate& c) {
  const auto& b = c.transform;
  const auto prod = b.transpose() * m.to_rational() * b;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Rational expect = i == j ? c.diagonal[i] : Rational(0);
      if (prod(i, j) != expect) return false;
    }
  return m.size() == 0 || sgn(determinant(b)) != 0;
}

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite, NegativeSemidefinite, NegativeDefinite };

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::NegativeSemidefinite: return "NegativeSemidefinite";
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
  }
  return "?";
}

inline Definiteness classify(const Signature& s) {
  const std::size_t t = s.positive + s.zero + s.negative;
  if (s.positive == t) return Definiteness::PositiveDefinite;
  if (s.negative == 0) return Definiteness::PositiveSemidefinite;
  if (s.negative == t) return Definiteness::NegativeDefinite;
  if (s.positive == 0) return Definiteness::NegativeSemidefinite;
  return Definiteness::Indefinite;
}

inline Definiteness classify_definiteness(const SymmetricIntegerMatrix& m) { return classify(signature(m)); }

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
inline IntegerVector primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  IntegerVector out;
  int sign = 0;
  for (auto& n : ints) {
    if (g != 0) n /= g;
    if (sign == 0 && n != 0) sign = n > 0 ? 1 : -1;
  }
  for (auto& n : ints) {
    n *= sign == 0 ? 1 : sign;
    if (!n.fits_slong_p()) throw Overflow("witness entry exceeds 64 bits");
    out.push_back(n.get_si());
  }
  return out;
}

/// A nonzero integer v with v^T M v <= 0, read off from the first
/// non-positive diagonal entry of the congruence; nullopt when M is
/// positive definite.
inline std::optional<IntegerVector> isotropic_or_negative_integer_vector(const SymmetricIntegerMatrix& m) {
  const auto c = diagonalize(m);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (sgn(c.diagonal[k]) > 0) continue;
    return primitive_integer_vector(c.transform.col(k));
  }
  return std::nullopt;
}

}  // namespace tautilt

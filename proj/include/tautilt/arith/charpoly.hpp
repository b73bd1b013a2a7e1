#pragma once

#include <utility>
#include <vector>

#include "tautilt/arith/matrix.hpp"
#include "tautilt/arith/poly.hpp"

namespace tautilt {

/// Characteristic polynomial det(x I - M) via reduction to upper
/// Hessenberg form followed by the standard three-term recurrence.
template <Field F>
Poly<F> charpoly(Matrix<F> h) {
  if (h.rows() != h.cols()) throw InvalidArgument("charpoly of non-square matrix");
  const F f = h.field();
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && f.is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const auto piv = f.inv(h(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      const auto u = f.mul(h(j, m - 1), piv);
      if (f.is_zero(u)) continue;
      for (std::size_t c = 0; c < n; ++c) h(j, c) = f.sub(h(j, c), f.mul(u, h(m, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.add(h(r, m), f.mul(u, h(r, j)));
    }
  }
  // p[k] = charpoly of the leading k x k block.
  std::vector<Poly<F>> p;
  p.push_back(Poly<F>::constant(f, f.one()));
  const auto x = Poly<F>::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly<F> next = (x - Poly<F>::constant(f, h(k - 1, k - 1))) * p[k - 1];
    auto t = f.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      const auto c = f.mul(t, h(i, k - 1));
      if (!f.is_zero(c)) next = next - Poly<F>::constant(f, c) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

/// Evaluates a polynomial at a square matrix by Horner's rule.
template <Field F>
Matrix<F> evaluate(const Poly<F>& poly, const Matrix<F>& m) {
  const F& f = m.field();
  Matrix<F> r(f, m.rows(), m.cols());
  for (long d = poly.degree(); d >= 0; --d) {
    r = r * m;
    const auto c = poly.coeff(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) = f.add(r(i, i), c);
  }
  return r;
}

}  // namespace tautilt

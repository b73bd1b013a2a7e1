#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tautilt/arith/field.hpp"
#include "tautilt/error.hpp"

namespace tautilt {

template <Field F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over a field.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  explicit Matrix(F field = F{}, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const { return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<F> col(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void append_row(const Vec<F>& r) {
    if (r.size() != cols_) throw InvalidArgument("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
    const F& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return c;
  }
  Matrix scaled(const value_type& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x = field_.mul(x, s);
    return c;
  }
  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector product: shape mismatch");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(v[j])) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  const std::vector<value_type>& data() const { return data_; }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

template <Field F>
struct Echelon {
  Matrix<F> reduced;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <Field F>
Echelon<F> row_echelon(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<F> red(f, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) red(i, j) = m(i, j);
  return {std::move(red), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return row_echelon(m).pivots.size();
}

/// Basis of {v : m v = 0}, as the rows of the returned matrix.
template <Field F>
Matrix<F> nullspace(const Matrix<F>& m) {
  const F& f = m.field();
  const auto e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix<F> basis(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

template <Field F>
typename F::value_type determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square matrix");
  const F& f = m.field();
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of non-square matrix");
  const F& f = m.field();
  const std::size_t n = m.rows();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Incrementally maintained row space in reduced echelon form. Used for
/// spinning vectors, span membership and quotient coordinates.
template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  /// Reduce v against the basis (entries at pivot columns become zero).
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!field_.is_zero(rows_[i][j])) v[j] = field_.sub(v[j], field_.mul(c, rows_[i][j]));
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    const auto r = reduce(v);
    for (const auto& x : r)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  /// Adds v; returns true when the dimension grew.
  bool insert(const Vec<F>& v) {
    if (v.size() != ambient_) throw InvalidArgument("Subspace::insert: width mismatch");
    Vec<F> r = reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && field_.is_zero(r[piv])) ++piv;
    if (piv == ambient_) return false;
    const auto inv = field_.inv(r[piv]);
    for (auto& x : r) x = field_.mul(x, inv);
    for (auto& row : rows_) {
      const auto c = row[piv];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) row[j] = field_.sub(row[j], field_.mul(c, r[j]));
    }
    // Keep rows ordered by pivot column.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
  }

  /// Coordinates of a vector known to lie in the subspace, w.r.t. basis().
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Non-pivot columns; the images of these unit vectors form a basis of
  /// the quotient ambient / this.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> piv(ambient_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }

  Matrix<F> as_matrix() const { return Matrix<F>::from_rows(field_, rows_, ambient_); }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tautilt

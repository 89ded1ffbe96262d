#ifndef G2K_MATRIX_HPP
#define G2K_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "g2k/errors.hpp"
#include "g2k/field.hpp"

namespace g2k {

/// Dense row-major matrix over a field. Elimination is exact.
template <FieldDescriptor F>
class Matrix {
 public:
  using E = elem_t<F>;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  Matrix(F field, const std::vector<std::vector<E>>& rows) : Matrix(std::move(field), rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rows[i].size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix");
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
    }
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<E> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && (*this)(piv, c).is_zero()) ++piv;
      if (piv == rows_) continue;
      swap_rows(r, piv);
      E inv = field_.one() / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        E factor = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right kernel {v : M v = 0}; rank + kernel().size() == cols().
  std::vector<std::vector<E>> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<E> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  E det() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    Matrix m = *this;
    E d = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && m(piv, c).is_zero()) ++piv;
      if (piv == rows_) return field_.zero();
      if (piv != c) {
        m.swap_rows(c, piv);
        d = -d;
      }
      d *= m(c, c);
      E inv = field_.one() / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        E factor = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= factor * m(c, j);
      }
    }
    return d;
  }

  std::vector<E> apply(const std::vector<E>& v) const {
    if (v.size() != cols_) fail(ErrorCode::InvalidArgument, "dimension mismatch in matrix-vector product");
    std::vector<E> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<E> a_;
};

/// Fraction-free (Bareiss) determinant over an integral domain R. `exact_div(a, b)`
/// must return a / b when b divides a exactly. `is_zero` tests for the zero ring element.
template <class R, class ExactDiv, class IsZero>
R bareiss_det(std::vector<std::vector<R>> m, const R& one, ExactDiv exact_div, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return R(one) - one;
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  if (negate) d = (R(one) - one) - d;
  return d;
}

/// 3x3 determinant by cofactor expansion; works over any commutative ring.
template <class R>
R det3(const R& a, const R& b, const R& c, const R& d, const R& e, const R& f, const R& g, const R& h, const R& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace g2k

#endif  // G2K_MATRIX_HPP

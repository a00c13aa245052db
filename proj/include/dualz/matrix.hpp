#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "dualz/integer.hpp"

namespace dualz {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-dimensional shapes (0 x n, n x 0) are ordinary values: they describe
/// maps into or out of the zero group and compose like any other matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Literal constructor for tests and fixed examples; rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix column(const IntVector& v);
  static IntMatrix diagonal(const IntVector& d, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> entries() const { return data_; }
  std::span<Int> entries() { return data_; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  /// Columns [c0, c0 + n).
  IntMatrix columns(std::size_t c0, std::size_t n) const { return block(0, c0, rows_, n); }
  IntMatrix row_range(std::size_t r0, std::size_t n) const { return block(r0, 0, n, cols_); }

  bool is_zero() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// (row a, row b) <- (p*a + q*b, r*a + s*b)
  void combine_rows(std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r,
                    const Int& s);
  void combine_cols(std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r,
                    const Int& s);

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Int& k);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a);
IntMatrix operator*(const Int& k, IntMatrix a);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

/// Kronecker product.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
/// Matrix of X -> L * X * R acting on row-major vec(X), X of shape
/// L.cols() x R.rows().
IntMatrix sandwich_operator(const IntMatrix& left, const IntMatrix& right);

/// Row-major flattening and its inverse.
IntVector flatten(const IntMatrix& m);
IntMatrix unflatten(std::span<const Int> v, std::size_t rows, std::size_t cols);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace dualz

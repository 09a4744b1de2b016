#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cechspan/types.hpp"

namespace cechspan {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
std::vector<Integer> multiply(const IntMatrix& m, const std::vector<Integer>& x);
std::string to_string(const IntMatrix& m);

/// U * M * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

struct SmithOptions {
  bool track_u = true;
  bool track_v = true;
  bool track_inverses = true;
};

/// Minimal-absolute-value pivoting with (row, column) lexicographic tie-break.
/// Runs in checked 64-bit arithmetic and restarts with GMP integers on overflow.
SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

/// Determinant of a square matrix of rationals (fraction-based elimination).
Rational determinant(Matrix<Rational> m);

}  // namespace cechspan

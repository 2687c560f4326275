#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "symlat/exactnum.hpp"

namespace symlat {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Scalar>;
using IntMatrix = Matrix<Integer>;

inline constexpr std::size_t kMaxDeterminantSize = 600;

ExactMatrix to_exact(const IntMatrix& m);
IntMatrix to_integer_matrix(const ExactMatrix& m);  // throws std::domain_error on fractions

/// Fraction-free Bareiss elimination; rational input is lifted to integers
/// row by row. Size cap kMaxDeterminantSize.
Scalar det_exact(const ExactMatrix& m);
Integer det_exact(const IntMatrix& m);

std::size_t rank(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);  // throws std::domain_error if singular

struct SmithForm {
  std::vector<Integer> factors;  // nonzero invariant factors, d_1 | d_2 | ...
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

/// Row-style Hermite normal form with zero rows removed. Two integer row
/// matrices span the same lattice iff their HNFs are equal.
IntMatrix hermite_normal_form(IntMatrix m);

/// Rows form a basis of { x in Z^n : m * x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

/// Basis (rows) of (rowspace(l) (x) Q) intersected with Z^n.
IntMatrix saturate(const IntMatrix& l);

std::string to_string(const ExactMatrix& m);

}  // namespace symlat

#ifndef FGI_MATRIX_HPP
#define FGI_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fgi/rational.hpp"

namespace fgi {

/// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Gaussian elimination determinant.
Rational determinant(const Matrix& m);

/// Gauss-Jordan inverse. Throws fgi::singular_matrix_error.
Matrix inverse(const Matrix& m);

/// Solves m x = b for a column vector b. Throws fgi::singular_matrix_error.
std::vector<Rational> solve(const Matrix& m, std::vector<Rational> b);

}  // namespace fgi

#endif  // FGI_MATRIX_HPP

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hermeq/gaussian.hpp"

namespace hermeq {

// Dense row-major matrix over Gaussian rationals. Zero rows or columns are
// legal; such matrices behave as the empty linear map (rank 0, products give
// zero matrices of the induced shape).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix identity(int n);
  static Matrix scalarDiag(int n, const GaussianRational& c);

  // Row-major literal, mostly for tests and fixtures:
  // Matrix::fromRows({{1, 2}, {3, 4}}).
  static Matrix fromRows(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }
  bool isEmptyShape() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const GaussianRational& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix adjoint() const;  // conjugate transpose
  bool isHermitian() const;
  bool isZero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& c, const Matrix& m);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Copy of the block starting at (r0, c0) with shape nr x nc.
  Matrix sub(int r0, int c0, int nr, int nc) const;
  Matrix topRows(int n) const { return sub(0, 0, n, cols_); }
  Matrix selectColumns(const std::vector<int>& idx) const;

  std::string str() const;  // "[[a, b], [c, d]]" with GaussianRational::str entries

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> e_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

// Assembles a block grid; all cells in a row share a height, all cells in a
// column share a width. Throws DimensionMismatch on ragged input.
Matrix blockGrid(const std::vector<std::vector<Matrix>>& cells);

}  // namespace hermeq

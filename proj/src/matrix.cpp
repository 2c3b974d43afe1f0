#include "hermeq/matrix.hpp"

#include <cstddef>

#include "hermeq/error.hpp"

namespace hermeq {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::DimensionMismatch, "negative matrix dimension");
  e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::scalarDiag(int n, const GaussianRational& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Matrix Matrix::fromRows(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      fail(Errc::DimensionMismatch, "ragged row literal");
    int j = 0;
    for (const auto& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

bool Matrix::isHermitian() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (!at(i, i).isReal()) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  }
  return true;
}

bool Matrix::isZero() const {
  for (const auto& v : e_)
    if (!v.isZero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.e_) v = -v;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "add " + shape(*this) + " and " + shape(o));
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "subtract " + shape(*this) + " and " + shape(o));
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    fail(Errc::DimensionMismatch, "multiply " + shape(a) + " by " + shape(b));
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b.at(k, j);
        if (!bkj.isZero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Matrix operator*(const GaussianRational& c, const Matrix& m) {
  Matrix out = m;
  for (auto& v : out.e_) v *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix Matrix::sub(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    fail(Errc::DimensionMismatch, "submatrix out of bounds");
  Matrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::selectColumns(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (idx[j] < 0 || idx[j] >= cols_) fail(Errc::DimensionMismatch, "column index out of range");
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    fail(Errc::DimensionMismatch, "hcat " + shape(a) + " and " + shape(b));
  Matrix m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "vcat " + shape(a) + " and " + shape(b));
  Matrix m(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
  }
  return m;
}

Matrix blockGrid(const std::vector<std::vector<Matrix>>& cells) {
  if (cells.empty()) return Matrix();
  std::size_t gridCols = cells[0].size();
  std::vector<int> heights(cells.size());
  std::vector<int> widths(gridCols, -1);
  int totalRows = 0;
  for (std::size_t bi = 0; bi < cells.size(); ++bi) {
    if (cells[bi].size() != gridCols) fail(Errc::DimensionMismatch, "ragged block grid");
    heights[bi] = cells[bi][0].rows();
    for (std::size_t bj = 0; bj < gridCols; ++bj) {
      if (cells[bi][bj].rows() != heights[bi])
        fail(Errc::DimensionMismatch, "block grid row height mismatch");
      if (widths[bj] < 0) widths[bj] = cells[bi][bj].cols();
      if (cells[bi][bj].cols() != widths[bj])
        fail(Errc::DimensionMismatch, "block grid column width mismatch");
    }
    totalRows += heights[bi];
  }
  int totalCols = 0;
  for (int w : widths) totalCols += w;
  Matrix m(totalRows, totalCols);
  int r0 = 0;
  for (std::size_t bi = 0; bi < cells.size(); ++bi) {
    int c0 = 0;
    for (std::size_t bj = 0; bj < gridCols; ++bj) {
      const Matrix& cell = cells[bi][bj];
      for (int i = 0; i < cell.rows(); ++i)
        for (int j = 0; j < cell.cols(); ++j) m.at(r0 + i, c0 + j) = cell.at(i, j);
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  return m;
}

}  // namespace hermeq

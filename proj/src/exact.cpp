#include "hermeq/exact.hpp"

#include <utility>
#include <vector>

#include "hermeq/error.hpp"

namespace hermeq {

namespace {

// Pivot score for full-pivot elimination: |num(re)| + |num(im)|.
mpz_class pivotScore(const GaussianRational& v) {
  return abs(v.re.numerator()) + abs(v.im.numerator());
}

// Eliminates column `col` below/above using row `prow` in place.
void eliminateColumn(Matrix& w, int prow, int col, bool above) {
  GaussianRational inv = w.at(prow, col).inverse();
  for (int i = 0; i < w.rows(); ++i) {
    if (i == prow || (!above && i < prow)) continue;
    const GaussianRational f = w.at(i, col) * inv;
    if (f.isZero()) continue;
    for (int j = 0; j < w.cols(); ++j) w.at(i, j) -= f * w.at(prow, j);
  }
}

}  // namespace

int rank(const Matrix& a) {
  Matrix w = a;
  const int m = w.rows(), n = w.cols();
  int r = 0;
  std::vector<int> colPerm(n);
  for (int j = 0; j < n; ++j) colPerm[j] = j;
  while (r < m && r < n) {
    int pi = -1, pj = -1;
    mpz_class best = 0;
    for (int i = r; i < m; ++i)
      for (int j = r; j < n; ++j) {
        if (w.at(i, j).isZero()) continue;
        mpz_class s = pivotScore(w.at(i, j));
        if (pi < 0 || cmp(s, best) > 0) {
          pi = i;
          pj = j;
          best = std::move(s);
        }
      }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < n; ++j) std::swap(w.at(pi, j), w.at(r, j));
    if (pj != r)
      for (int i = 0; i < m; ++i) std::swap(w.at(i, pj), w.at(i, r));
    eliminateColumn(w, r, r, /*above=*/false);
    ++r;
  }
  return r;
}

Inertia inertia(const Matrix& a) {
  if (!a.isHermitian())
    fail(Errc::NotHermitian, "inertia requires an exactly Hermitian input");
  Matrix w = a;
  Inertia out;
  while (w.rows() > 0) {
    const int d = w.rows();
    int k = -1;
    for (int i = 0; i < d && k < 0; ++i)
      if (!w.at(i, i).isZero()) k = i;
    if (k >= 0) {
      // 1x1 pivot: the diagonal entry is real by Hermitian-ness.
      (w.at(k, k).re.sign() > 0 ? out.plus : out.minus)++;
      Matrix next(d - 1, d - 1);
      const GaussianRational inv = w.at(k, k).inverse();
      for (int p = 0, pi = 0; p < d; ++p) {
        if (p == k) continue;
        for (int q = 0, qi = 0; q < d; ++q) {
          if (q == k) continue;
          next.at(pi, qi) = w.at(p, q) - w.at(p, k) * inv * w.at(k, q);
          ++qi;
        }
        ++pi;
      }
      w = std::move(next);
      continue;
    }
    // All diagonal entries are zero: find the first off-diagonal pair.
    int bi = -1, bj = -1;
    for (int i = 0; i < d && bi < 0; ++i)
      for (int j = i + 1; j < d; ++j)
        if (!w.at(i, j).isZero()) {
          bi = i;
          bj = j;
          break;
        }
    if (bi < 0) {
      out.zero += d;  // remaining block is identically zero
      break;
    }
    // Hyperbolic 2x2 block [[0, a], [conj(a), 0]] contributes (+1, -1);
    // the update uses its inverse [[0, 1/conj(a)], [1/a, 0]].
    out.plus++;
    out.minus++;
    const GaussianRational va = w.at(bi, bj);
    const GaussianRational invA = va.inverse();
    const GaussianRational invAc = va.conj().inverse();
    Matrix next(d - 2, d - 2);
    for (int p = 0, pi = 0; p < d; ++p) {
      if (p == bi || p == bj) continue;
      for (int q = 0, qi = 0; q < d; ++q) {
        if (q == bi || q == bj) continue;
        next.at(pi, qi) =
            w.at(p, q) - w.at(p, bj) * invA * w.at(bi, q) - w.at(p, bi) * invAc * w.at(bj, q);
        ++qi;
      }
      ++pi;
    }
    w = std::move(next);
  }
  return out;
}

Matrix inverseSquare(const Matrix& a) {
  if (!a.isSquare()) fail(Errc::FormulaRangeError, "inverse of a non-square matrix");
  const int n = a.rows();
  Matrix w = hcat(a, Matrix::identity(n));
  for (int c = 0; c < n; ++c) {
    int p = -1;
    mpz_class best = 0;
    for (int i = c; i < n; ++i) {
      if (w.at(i, c).isZero()) continue;
      mpz_class s = pivotScore(w.at(i, c));
      if (p < 0 || cmp(s, best) > 0) {
        p = i;
        best = std::move(s);
      }
    }
    if (p < 0) fail(Errc::FormulaRangeError, "inverse of a singular matrix");
    if (p != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(c, j));
    const GaussianRational inv = w.at(c, c).inverse();
    for (int j = 0; j < 2 * n; ++j) w.at(c, j) *= inv;
    eliminateColumn(w, c, c, /*above=*/true);
  }
  return w.sub(0, n, n, n);
}

PinvBundle pinv(const Matrix& a) {
  const int m = a.rows(), n = a.cols();
  // Reduced row echelon form with row pivoting only, so the pivot column
  // indices index into the original matrix.
  Matrix r = a;
  std::vector<int> pivotCols;
  int pr = 0;
  for (int c = 0; c < n && pr < m; ++c) {
    int p = -1;
    mpz_class best = 0;
    for (int i = pr; i < m; ++i) {
      if (r.at(i, c).isZero()) continue;
      mpz_class s = pivotScore(r.at(i, c));
      if (p < 0 || cmp(s, best) > 0) {
        p = i;
        best = std::move(s);
      }
    }
    if (p < 0) continue;
    if (p != pr)
      for (int j = 0; j < n; ++j) std::swap(r.at(p, j), r.at(pr, j));
    const GaussianRational inv = r.at(pr, c).inverse();
    for (int j = 0; j < n; ++j) r.at(pr, j) *= inv;
    eliminateColumn(r, pr, c, /*above=*/true);
    pivotCols.push_back(c);
    ++pr;
  }
  const int rk = static_cast<int>(pivotCols.size());
  PinvBundle out;
  out.rank = rk;
  if (rk == 0) {
    out.pinv = Matrix(n, m);
  } else {
    Matrix f = a.selectColumns(pivotCols);  // m x r, full column rank
    Matrix g = r.topRows(rk);               // r x n, full row rank
    Matrix gga = inverseSquare(g * g.adjoint());
    Matrix ffa = inverseSquare(f.adjoint() * f);
    out.pinv = g.adjoint() * gga * ffa * f.adjoint();
  }
  out.eProj = Matrix::identity(m) - a * out.pinv;
  out.fProj = Matrix::identity(n) - out.pinv * a;
  return out;
}

Rational frobeniusNormSq(const Matrix& a) {
  Rational s;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a.at(i, j).normSq();
  return s;
}

bool isPsd(const Matrix& a) {
  return a.isHermitian() && inertia(a).minus == 0;
}

bool rangeIncluded(const Matrix& b, const Matrix& a) {
  if (b.rows() != a.rows()) fail(Errc::DimensionMismatch, "range test needs equal row counts");
  return rank(hcat(a, b)) == rank(a);
}

bool rangeEqual(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows()) fail(Errc::DimensionMismatch, "range test needs equal row counts");
  const int ru = rank(u), rv = rank(v);
  return ru == rv && rank(hcat(u, v)) == ru;
}

}  // namespace hermeq

#include "hermeq/rng.hpp"

#include "hermeq/exact.hpp"

namespace hermeq {

Rational drawRational(Rng& rng, int bound) {
  return Rational(rng.nextInt(-bound, bound), rng.nextInt(1, bound));
}

GaussianRational drawGaussian(Rng& rng, int bound) {
  Rational re = drawRational(rng, bound);
  Rational im = drawRational(rng, bound);
  return {re, im};
}

Matrix drawMatrix(Rng& rng, int m, int n, int bound) {
  Matrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = drawGaussian(rng, bound);
  return a;
}

Matrix drawHermitian(Rng& rng, int n, int bound) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = GaussianRational(drawRational(rng, bound));
    for (int j = i + 1; j < n; ++j) {
      a.at(i, j) = drawGaussian(rng, bound);
      a.at(j, i) = a.at(i, j).conj();
    }
  }
  return a;
}

Matrix drawPsd(Rng& rng, int n, int bound) {
  Matrix v = drawMatrix(rng, n, n, bound);
  return v * v.adjoint();
}

Matrix drawNonsingular(Rng& rng, int n, int bound) {
  for (;;) {
    Matrix p = drawMatrix(rng, n, n, bound);
    if (rank(p) == n) return p;
  }
}

}  // namespace hermeq

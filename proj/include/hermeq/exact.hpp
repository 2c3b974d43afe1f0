#pragma once

#include "hermeq/matrix.hpp"

namespace hermeq {

// Signature triple (i+, i-, i0) of a Hermitian matrix.
struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  int rank() const { return plus + minus; }
  int order() const { return plus + minus + zero; }

  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
  }
  friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
};

// Moore-Penrose pseudoinverse together with the two orthogonal projectors
// onto the cokernel and kernel: eProj = I - A A+, fProj = I - A+ A.
struct PinvBundle {
  Matrix pinv;   // n x m
  Matrix eProj;  // m x m
  Matrix fProj;  // n x n
  int rank = 0;
};

// Exact rank via fraction-free-style Gaussian elimination with full pivoting.
// The pivot is the candidate with the largest numerator magnitude; the choice
// only affects intermediate coefficient growth, never the result.
int rank(const Matrix& a);

// Exact inertia via recursive Sylvester congruence reduction. Pivot order is
// deterministic: first nonzero diagonal entry, else the first nonzero
// off-diagonal pair in row-major order (which contributes one +1 and one -1).
// Throws NotHermitian unless a == a* exactly; the input is never symmetrized.
Inertia inertia(const Matrix& a);

// Pseudoinverse via full-rank factorization A = F G with F the pivot columns
// of A and G the nonzero rows of the reduced row echelon form:
// A+ = G* (G G*)^-1 (F* F)^-1 F*.
PinvBundle pinv(const Matrix& a);

Rational frobeniusNormSq(const Matrix& a);

// Exact inverse of a nonsingular square matrix (throws FormulaRangeError on a
// singular or non-square input; used by pinv and available to tests).
Matrix inverseSquare(const Matrix& a);

// Hermitian and positive semidefinite, decided exactly (non-throwing).
bool isPsd(const Matrix& a);

// range(b) subseteq range(a), decided as rank([a b]) == rank(a).
bool rangeIncluded(const Matrix& b, const Matrix& a);

// range(u) == range(v), decided as rank([u v]) == rank(u) == rank(v).
bool rangeEqual(const Matrix& u, const Matrix& v);

}  // namespace hermeq

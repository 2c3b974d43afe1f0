#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hermeq/exact.hpp"

namespace hermeq {

// AX = B with A, B of identical shape m x n.
struct LinearEqSpec {
  Matrix a;
  Matrix b;
};

// AXA* = B with A m x n and B Hermitian m x m.
struct CongruenceEqSpec {
  Matrix a;
  Matrix b;
};

LinearEqSpec makeLinearSpec(Matrix a, Matrix b);
CongruenceEqSpec makeCongruenceSpec(Matrix a, Matrix b);

// Solvability broken into the individual closed conditions, so a caller (or
// the CLI user) can see which one failed. solvable is their conjunction.
struct SolvabilityCertificate {
  bool solvable = false;
  std::vector<std::pair<std::string, bool>> conditions;
};

// Hermitian X with AX = B exists iff R(B) <= R(A) and AB* = BA*.
SolvabilityCertificate checkLinearHermitian(const LinearEqSpec& spec);

// Psd X with AX = B exists iff R(B) <= R(A), AB* is psd and R(AB*) = R(B).
SolvabilityCertificate checkLinearPsd(const LinearEqSpec& spec);

// Hermitian X with AXA* = B exists iff A A+ B = B.
SolvabilityCertificate checkCongruence(const CongruenceEqSpec& spec);

// X = A+ B + (A+ B)* - A+ B A+ A + F_A U F_A; U Hermitian n x n sweeps the
// whole Hermitian solution set.
Matrix hermitianSolution(const LinearEqSpec& spec, const Matrix& u);

// X = B* (A B*)+ B + F_A V V* F_A; the psd parameter is supplied in Gram
// form V V* so the result is psd by construction. V is any n x n matrix.
Matrix psdSolution(const LinearEqSpec& spec, const Matrix& v);

// X = A+ B (A+)* + F_A U + U* F_A; U any n x n matrix.
Matrix congruenceSolution(const CongruenceEqSpec& spec, const Matrix& u);

// Least-squares members of the congruence family: X minimizes the Frobenius
// norm of B - AXA* (no solvability needed). The minimum value is
// |B - A A+ B A A+|_F^2 and does not depend on U; every X returned solves
// the normal equation A* A X A* A = A* B A exactly.
struct LeastSquaresResult {
  Rational residualNormSq;
  Matrix x;
};
LeastSquaresResult leastSquaresSolution(const CongruenceEqSpec& spec, const Matrix& u);

// Least-rank members: with M = [B A; A* 0], T = [0 I_n] and T1 = T F_M,
// Y = -T M+ T* + T1 V + V* T1* ranges over the Hermitian Y minimizing
// rank(B - AYA*); the minimum is 2 r[A,B] - r(M). V is any (m+n) x n
// matrix. Construction soundness (Hermitian Y, attained rank) is asserted.
struct LeastRankResult {
  int minRank = 0;
  Matrix y;
};
LeastRankResult leastRankSolution(const CongruenceEqSpec& spec, const Matrix& v);

// Deterministic samplers: same arguments, same matrix, on every platform.
Matrix sampleMatrix(std::uint64_t seed, int m, int n, int bound);
Matrix sampleHermitian(std::uint64_t seed, int n, int bound);
Matrix samplePsd(std::uint64_t seed, int n, int bound);

}  // namespace hermeq

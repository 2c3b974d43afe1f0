#pragma once

#include <optional>

#include "hermeq/solutions.hpp"

namespace hermeq {

// The six extremal values of a Hermitian-valued quantity ranging over a
// solution family, plus the order n of that quantity. Max i+ and max i- need
// not be attained together, so maxRank <= maxIPlus + maxIMinus is the only
// upper coupling that always holds.
struct ExtremalProfile {
  int maxRank = 0;
  int minRank = 0;
  int maxIPlus = 0;
  int minIPlus = 0;
  int maxIMinus = 0;
  int minIMinus = 0;
  int ambientOrder = 0;

  friend bool operator==(const ExtremalProfile& a, const ExtremalProfile& b) = default;
};

// Validates the profile invariants
//   0 <= value <= n,  min <= max per field,
//   minIPlus + minIMinus <= minRank <= maxRank <= min(n, maxIPlus + maxIMinus)
// and throws FormulaRangeError on violation: a profile out of range means a
// precondition was missed upstream, so it must not be silently clamped.
ExtremalProfile makeProfile(int maxRank, int minRank, int maxIPlus, int minIPlus, int maxIMinus,
                            int minIMinus, int ambientOrder);

enum class PsdSign { Plus, Minus };
enum class ConeConstraint { None, Psd };

// A - BXB* (and optionally - CYC*) with A Hermitian; the cone constraint
// restricts X to psd, and sign selects A + BXB* vs A - BXB* in that case.
struct CompletionSpec {
  Matrix a;
  Matrix b;
  std::optional<Matrix> c;
  PsdSign sign = PsdSign::Minus;
  ConeConstraint cone = ConeConstraint::None;
};

// rank/inertia range of A - BXB* over Hermitian X, via M = [A B; B* 0]:
//   max r = r[A,B]              min r  = 2r[A,B] - r(M)
//   max i(+-) = i(+-)(M)        min i(+-) = r[A,B] - i(-+)(M)
ExtremalProfile profileCompletionHermitian(const CompletionSpec& spec);

// rank/inertia range of A + BXB* (sign plus) or A - BXB* (sign minus) over
// psd X, same bordered M.
ExtremalProfile profileCompletionPsd(const CompletionSpec& spec);

// rank/inertia range of A - BXB* - CYC* over Hermitian X, Y, via the wider
// borderings of [A B C].
ExtremalProfile profileCompletionTwo(const CompletionSpec& spec);

// rank/inertia range of A - BXC - (BXC)* over all X (C given, requires
// range(B) <= range(C*)), or of A - BX - (BX)* when C is absent.
ExtremalProfile profileSkewPair(const Matrix& a, const Matrix& b,
                                const std::optional<Matrix>& c);

// Range of X1 - X2 where A_j X_j A_j* = B_j, via the five-block bordered
// matrix of both equations.
ExtremalProfile profileTwoCongruence(const CongruenceEqSpec& spec1,
                                     const CongruenceEqSpec& spec2);

// Range of X - P over Hermitian solutions of AX = B.
ExtremalProfile profileLinearVsP(const LinearEqSpec& spec, const Matrix& p);

// Range of X - P over psd solutions of AX = B, with psd P.
ExtremalProfile profilePsdLinearVsP(const LinearEqSpec& spec, const Matrix& p);

// Range of X - Y over Hermitian solutions of AX = B and CY = D.
ExtremalProfile profileTwoLinear(const LinearEqSpec& spec1, const LinearEqSpec& spec2);

// Range of X - Y where X runs over least-squares and Y over least-rank
// Hermitian solutions of AXA* = B. When B is psd the simplified formula set
// is evaluated too and any disagreement with the general one is raised as
// RouteDisagreement.
ExtremalProfile profileLsVsLr(const CongruenceEqSpec& spec);

}  // namespace hermeq

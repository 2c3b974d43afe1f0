#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermeq/profiles.hpp"

namespace hermeq {

enum class Relation {
  Succ,
  Succeq,
  Prec,
  Preceq,
  Nonsingular,
  Equal,
  RankInvariant,
  InertiaInvariant,
};
enum class Mode { Exists, Forall };

const char* relationStr(Relation r);
const char* modeStr(Mode m);

struct OrderingQuery {
  Relation relation = Relation::Succeq;
  Mode mode = Mode::Exists;
};

// A decided statement plus the exact integers that decided it. Every decision
// is computed along two independent routes (a closed rank/inertia condition
// and the extremal profile); a mismatch raises RouteDisagreement instead of
// returning a verdict.
struct Verdict {
  OrderingQuery query;
  bool holds = false;
  std::string route;
  std::vector<std::pair<std::string, long>> evidence;
  std::optional<Matrix> witness;
};

// Reads a statement off a profile of a difference family:
//   exists/forall nonsingular   <-> maxRank / minRank = n
//   exists equal                <-> minRank = 0
//   exists/forall definite      <-> max/min of the matching inertia = n
//   exists/forall semidefinite  <-> min/max of the opposite inertia = 0
//   rank/inertia invariance     <-> the matching extrema coincide
// Forall-equal is not profile-expressible and raises UnsupportedQuery.
Verdict decideFromProfile(const ExtremalProfile& pr, const OrderingQuery& q);

// X - P over Hermitian solutions of AX = B.
Verdict decideLinearVsP(const LinearEqSpec& spec, const Matrix& p, const OrderingQuery& q);

// X - P over psd solutions of AX = B, with P psd.
Verdict decidePsdLinearVsP(const LinearEqSpec& spec, const Matrix& p, const OrderingQuery& q);

// X - Y over Hermitian solutions of AX = B and CY = D. An exists-equal
// verdict that holds carries a common solution as witness.
Verdict decideTwoLinear(const LinearEqSpec& spec1, const LinearEqSpec& spec2,
                        const OrderingQuery& q);

// X1 - X2 over Hermitian solutions of A1 X1 A1* = B1 and A2 X2 A2* = B2.
Verdict decideTwoCongruence(const CongruenceEqSpec& spec1, const CongruenceEqSpec& spec2,
                            const OrderingQuery& q);

// Solutions of AXA* = B versus solutions of the transformed equation
// TAXA*T* = TBT*: the original set is always contained in the transformed
// one, and the sets are equal iff rank(TA) = rank(A).
Verdict decideTransformedSetEquality(const CongruenceEqSpec& spec, const Matrix& t);

// Order relations between a solution of AXA* = B and a solution of the
// transformed equation. Only exists-mode order statements are decidable;
// everything else raises UnsupportedQuery.
Verdict decideTransformedOrdering(const CongruenceEqSpec& spec, const Matrix& t,
                                  const OrderingQuery& q);

// Solutions of AXA* = B versus averages (X1 + X2)/2 of Hermitian solutions
// of T1 A X1 A* T1* = T1 B T1* and T2 A X2 A* T2* = T2 B T2*.
Verdict decideAverageEquality(const CongruenceEqSpec& spec, const Matrix& t1, const Matrix& t2);

// Average equality for the row partition A = [A1; A2]: the two transformed
// equations are the diagonal small equations A1 X A1* = B11, A2 X A2* = B22.
Verdict decideAveragePartition(const CongruenceEqSpec& spec, int m1);

// Average equality for a sum split A = A1 + A2, transformed by the
// complementary-range projectors of the two summands.
Verdict decideAverageSum(const CongruenceEqSpec& spec, const Matrix& a1);

// X - Y between least-squares and least-rank Hermitian solutions of
// AXA* = B. When B is psd the short-form conditions are evaluated as a third
// route and must agree as well.
Verdict decideLsVsLr(const CongruenceEqSpec& spec, const OrderingQuery& q);

}  // namespace hermeq

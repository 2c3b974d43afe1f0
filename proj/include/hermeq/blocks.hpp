#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hermeq/exact.hpp"

namespace hermeq {

// The bordered block matrices the rank/inertia formulas are phrased over.
enum class BlockName {
  M1Bordered,      // {A, B}           -> [A B; B* 0]
  M2Bordered,      // {A, B, D}        -> [A B; B* D]
  MTwoCongruence,  // {A1, B1, A2, B2} -> [B1 0 A1; 0 -B2 A2; A1* A2* 0]
  NTwoLinear,      // {A, B, C, D}     -> [A B; C D]
  MTwoLinear,      // {A, B, C, D}     -> [AB* 0 A; 0 -CD* C; A* C* 0]
  MPsdVsP,         // {A, B, P}        -> [AB* B; B* P]
  MLsLr,           // {A, B}           -> [B A; A* 0]
  NLsLr,           // {A, B}           -> [B BA A; A*B 0 0; A* 0 0]
};

const char* blockNameStr(BlockName n);

struct NamedBlock {
  BlockName name;
  Matrix matrix;
};

// Assembles the named layout from its inputs in the order listed above.
// Every layout except NTwoLinear is Hermitian in its intended use; that is
// verified on the assembled matrix and violations throw NotHermitian.
NamedBlock assembleNamedBlock(BlockName name, const std::vector<Matrix>& inputs);

// One identity instance, with both sides evaluated independently so checking
// is a single comparison. Rank identities carry ints, inertia identities
// carry full signature triples.
struct IdentityReport {
  std::string name;
  std::variant<int, Inertia> lhs;
  std::variant<int, Inertia> rhs;
  bool holds = false;
};

// Row/column bordering rank expansions. Takes A (m x n), B (m x k),
// C (l x n); the trailing parameter is unused but kept so all expansion
// evaluators share the four-matrix shape.
//   r[A,B]       = r(A) + r(E_A B) = r(B) + r(E_B A)
//   r[A;C]       = r(A) + r(C F_A) = r(C) + r(A F_C)
//   r[A B; C 0]  = r(B) + r(C) + r(E_B A F_C)
std::vector<IdentityReport> rankExpansionReport(const Matrix& a, const Matrix& b, const Matrix& c,
                                                const Matrix& d);

// Inertia expansions of the bordered matrices M1 = [A B; B* 0] and
// M2 = [A B; B* D] with A (m x m) and D (n x n) Hermitian:
//   i(M1) = r(B) + i(E_B A E_B)                          always
//   i(M2) = i(A) + i([0 E_A B; B* E_A  D - B* A+ B])     always
//   i(M1) = (r[A,B], r(B))                               when A psd
//   i(M2) = i(A) + i(D - B* A+ B)                        when range(B) in range(A)
// The conditional ones are emitted only when their hypotheses hold.
std::vector<IdentityReport> inertiaExpansionReport(const Matrix& a, const Matrix& b,
                                                   const Matrix& d);

// Projector-absorbing expansions. Canonical layout making all five
// simultaneously well-formed: A (a x a) Hermitian, B (a x k), C (c x a),
// D (k x k) Hermitian, P (c x k), Q (a x k).
//   r[A B; E_P C 0]        = r[A B 0; C 0 P] - r(P)
//   r[A BF_Q; C 0]         = r[A B; C 0; 0 Q] - r(Q)
//   r[A BF_Q; E_P C 0]     = r[A B 0; C 0 P; 0 Q 0] - r(P) - r(Q)
//   i[A BF_P; F_P B* 0]    = i[A B 0; B* 0 P*; 0 P 0] - r(P)
//   i[E_Q A E_Q  E_Q B; B* E_Q  D] = i[A B Q; B* D 0; Q* 0 0] - r(Q)
std::vector<IdentityReport> projectorExpansionReport(const Matrix& a, const Matrix& b,
                                                     const Matrix& c, const Matrix& d,
                                                     const Matrix& p, const Matrix& q);

// Direct-sum and hyperbolic-block inertias, for Hermitian A, B and any Q:
//   i(diag(A,B)) = i(A) + i(B)
//   i([0 Q; Q* 0]) = (r(Q), r(Q))
std::vector<IdentityReport> inertiaSplitReport(const Matrix& a, const Matrix& b, const Matrix& q);

}  // namespace hermeq

#include "hermeq/solutions.hpp"

#include <stdexcept>

#include "hermeq/error.hpp"
#include "hermeq/rng.hpp"

namespace hermeq {

namespace {

void needShape(const Matrix& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    fail(Errc::DimensionMismatch, std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                      std::to_string(cols) + ", got " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

SolvabilityCertificate certify(std::vector<std::pair<std::string, bool>> conditions) {
  SolvabilityCertificate c;
  c.conditions = std::move(conditions);
  c.solvable = true;
  for (const auto& [label, ok] : c.conditions) c.solvable = c.solvable && ok;
  return c;
}

}  // namespace

LinearEqSpec makeLinearSpec(Matrix a, Matrix b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "AX = B needs A and B of identical shape");
  return LinearEqSpec{std::move(a), std::move(b)};
}

CongruenceEqSpec makeCongruenceSpec(Matrix a, Matrix b) {
  if (b.rows() != a.rows() || b.cols() != a.rows())
    fail(Errc::DimensionMismatch, "AXA* = B needs B square of order rows(A)");
  if (!b.isHermitian()) fail(Errc::NotHermitian, "AXA* = B needs Hermitian B");
  return CongruenceEqSpec{std::move(a), std::move(b)};
}

SolvabilityCertificate checkLinearHermitian(const LinearEqSpec& spec) {
  Matrix cross = spec.a * spec.b.adjoint();
  return certify({{"R(B) <= R(A)", rangeIncluded(spec.b, spec.a)},
                  {"AB* = BA*", cross.isHermitian()}});
}

SolvabilityCertificate checkLinearPsd(const LinearEqSpec& spec) {
  Matrix cross = spec.a * spec.b.adjoint();
  return certify({{"R(B) <= R(A)", rangeIncluded(spec.b, spec.a)},
                  {"AB* psd", isPsd(cross)},
                  {"R(AB*) = R(B)", rank(cross) == rank(spec.b)}});
}

SolvabilityCertificate checkCongruence(const CongruenceEqSpec& spec) {
  Matrix aa = spec.a * pinv(spec.a).pinv;
  return certify({{"A A+ B = B", aa * spec.b == spec.b}});
}

Matrix hermitianSolution(const LinearEqSpec& spec, const Matrix& u) {
  if (!checkLinearHermitian(spec).solvable)
    fail(Errc::Unsolvable, "AX = B has no Hermitian solution");
  int n = spec.a.cols();
  needShape(u, n, n, "parameter U");
  if (!u.isHermitian()) fail(Errc::NotHermitian, "parameter U");
  PinvBundle pa = pinv(spec.a);
  Matrix x0 = pa.pinv * spec.b;
  return x0 + x0.adjoint() - x0 * pa.pinv * spec.a + pa.fProj * u * pa.fProj;
}

Matrix psdSolution(const LinearEqSpec& spec, const Matrix& v) {
  if (!checkLinearPsd(spec).solvable) fail(Errc::Unsolvable, "AX = B has no psd solution");
  int n = spec.a.cols();
  needShape(v, n, n, "parameter V");
  Matrix cross = spec.a * spec.b.adjoint();
  Matrix fa = pinv(spec.a).fProj;
  return spec.b.adjoint() * pinv(cross).pinv * spec.b + fa * v * v.adjoint() * fa;
}

Matrix congruenceSolution(const CongruenceEqSpec& spec, const Matrix& u) {
  if (!checkCongruence(spec).solvable) fail(Errc::Unsolvable, "AXA* = B is unsolvable");
  int n = spec.a.cols();
  needShape(u, n, n, "parameter U");
  PinvBundle pa = pinv(spec.a);
  return pa.pinv * spec.b * pa.pinv.adjoint() + pa.fProj * u + u.adjoint() * pa.fProj;
}

LeastSquaresResult leastSquaresSolution(const CongruenceEqSpec& spec, const Matrix& u) {
  int n = spec.a.cols();
  needShape(u, n, n, "parameter U");
  PinvBundle pa = pinv(spec.a);
  Matrix proj = spec.a * pa.pinv;  // A A+
  LeastSquaresResult out;
  out.residualNormSq = frobeniusNormSq(spec.b - proj * spec.b * proj);
  out.x = pa.pinv * spec.b * pa.pinv.adjoint() + pa.fProj * u + u.adjoint() * pa.fProj;
  // Normal equation A* A X A* A = A* B A; a failure here is a construction
  // bug, not bad input.
  Matrix lhs = spec.a.adjoint() * spec.a * out.x * spec.a.adjoint() * spec.a;
  Matrix rhs = spec.a.adjoint() * spec.b * spec.a;
  if (lhs != rhs) throw std::logic_error("least-squares member violates the normal equation");
  return out;
}

LeastRankResult leastRankSolution(const CongruenceEqSpec& spec, const Matrix& v) {
  int m = spec.a.rows(), n = spec.a.cols();
  needShape(v, m + n, n, "parameter V");
  Matrix mBlock = blockGrid(
      {{spec.b, spec.a}, {spec.a.adjoint(), Matrix::zero(n, n)}});
  Matrix t = hcat(Matrix::zero(n, m), Matrix::identity(n));
  PinvBundle pm = pinv(mBlock);
  Matrix t1 = t * pm.fProj;
  Matrix core = -(t * pm.pinv * t.adjoint());
  if (!core.isHermitian()) throw std::logic_error("least-rank core is not Hermitian");
  LeastRankResult out;
  out.y = core + t1 * v + v.adjoint() * t1.adjoint();
  out.minRank = 2 * rank(hcat(spec.a, spec.b)) - pm.rank;
  if (rank(spec.b - spec.a * out.y * spec.a.adjoint()) != out.minRank)
    throw std::logic_error("least-rank member misses the minimum rank");
  return out;
}

Matrix sampleMatrix(std::uint64_t seed, int m, int n, int bound) {
  Rng rng(seed);
  return drawMatrix(rng, m, n, bound);
}

Matrix sampleHermitian(std::uint64_t seed, int n, int bound) {
  Rng rng(seed);
  return drawHermitian(rng, n, bound);
}

Matrix samplePsd(std::uint64_t seed, int n, int bound) {
  Rng rng(seed);
  return drawPsd(rng, n, bound);
}

}  // namespace hermeq

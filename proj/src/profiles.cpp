#include "hermeq/profiles.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermeq/blocks.hpp"
#include "hermeq/error.hpp"

namespace hermeq {

namespace {

void checkField(const char* label, int lo, int hi, int n) {
  if (lo < 0 || hi > n || lo > hi)
    fail(Errc::FormulaRangeError, std::string("profile field out of range: ") + label);
}

Matrix zeros(int r, int c) { return Matrix::zero(r, c); }

}  // namespace

ExtremalProfile makeProfile(int maxRank, int minRank, int maxIPlus, int minIPlus, int maxIMinus,
                            int minIMinus, int ambientOrder) {
  checkField("rank", minRank, maxRank, ambientOrder);
  checkField("iplus", minIPlus, maxIPlus, ambientOrder);
  checkField("iminus", minIMinus, maxIMinus, ambientOrder);
  if (minIPlus + minIMinus > minRank)
    fail(Errc::FormulaRangeError, "profile: min inertia exceeds min rank");
  if (maxRank > maxIPlus + maxIMinus)
    fail(Errc::FormulaRangeError, "profile: max rank exceeds max inertia sum");
  return ExtremalProfile{maxRank, minRank, maxIPlus, minIPlus, maxIMinus, minIMinus, ambientOrder};
}

ExtremalProfile profileCompletionHermitian(const CompletionSpec& spec) {
  if (spec.cone != ConeConstraint::None || spec.c.has_value())
    throw std::logic_error("profileCompletionHermitian: plain one-term spec expected");
  if (!spec.a.isHermitian()) fail(Errc::NotHermitian, "completion: A must be Hermitian");
  if (spec.b.rows() != spec.a.rows()) fail(Errc::DimensionMismatch, "completion: B row count");
  const int m = spec.a.rows();
  const int rab = rank(hcat(spec.a, spec.b));
  const Inertia im = inertia(assembleNamedBlock(BlockName::M1Bordered, {spec.a, spec.b}).matrix);
  return makeProfile(rab, 2 * rab - im.rank(), im.plus, rab - im.minus, im.minus, rab - im.plus, m);
}

ExtremalProfile profileCompletionPsd(const CompletionSpec& spec) {
  if (spec.cone != ConeConstraint::Psd || spec.c.has_value())
    throw std::logic_error("profileCompletionPsd: one-term psd spec expected");
  if (!spec.a.isHermitian()) fail(Errc::NotHermitian, "completion: A must be Hermitian");
  if (spec.b.rows() != spec.a.rows()) fail(Errc::DimensionMismatch, "completion: B row count");
  const int m = spec.a.rows();
  const int rab = rank(hcat(spec.a, spec.b));
  const Inertia ia = inertia(spec.a);
  const Inertia im = inertia(assembleNamedBlock(BlockName::M1Bordered, {spec.a, spec.b}).matrix);
  if (spec.sign == PsdSign::Plus)
    return makeProfile(rab, ia.plus + rab - im.plus, im.plus, ia.plus, ia.minus, rab - im.plus, m);
  return makeProfile(rab, ia.minus + rab - im.minus, ia.plus, rab - im.minus, im.minus, ia.minus,
                     m);
}

ExtremalProfile profileCompletionTwo(const CompletionSpec& spec) {
  if (spec.cone != ConeConstraint::None || !spec.c.has_value())
    throw std::logic_error("profileCompletionTwo: two-term spec expected");
  if (!spec.a.isHermitian()) fail(Errc::NotHermitian, "completion: A must be Hermitian");
  const Matrix& a = spec.a;
  const Matrix& b = spec.b;
  const Matrix& c = *spec.c;
  if (b.rows() != a.rows() || c.rows() != a.rows())
    fail(Errc::DimensionMismatch, "completion: B/C row count");
  const int m = a.rows(), nb = b.cols(), nc = c.cols();
  const int rabc = rank(hcat(hcat(a, b), c));
  const int rBordC = rank(blockGrid({{a, b}, {c.adjoint(), zeros(nc, nb)}}));
  const int rWideB =
      rank(blockGrid({{a, b, c}, {b.adjoint(), zeros(nb, nb), zeros(nb, nc)}}));
  const int rWideC =
      rank(blockGrid({{a, b, c}, {c.adjoint(), zeros(nc, nb), zeros(nc, nc)}}));
  const Inertia ik = inertia(blockGrid({{a, b, c},
                                        {b.adjoint(), zeros(nb, nb), zeros(nb, nc)},
                                        {c.adjoint(), zeros(nc, nb), zeros(nc, nc)}}));
  return makeProfile(rabc, 2 * rabc + rBordC - rWideB - rWideC, ik.plus, rabc - ik.minus, ik.minus,
                     rabc - ik.plus, m);
}

ExtremalProfile profileSkewPair(const Matrix& a, const Matrix& b,
                                const std::optional<Matrix>& c) {
  if (!a.isHermitian()) fail(Errc::NotHermitian, "skew pair: A must be Hermitian");
  if (b.rows() != a.rows()) fail(Errc::DimensionMismatch, "skew pair: B row count");
  const int m = a.rows(), nb = b.cols();
  const Inertia im1 = inertia(assembleNamedBlock(BlockName::M1Bordered, {a, b}).matrix);
  const int rm1 = im1.rank();
  if (!c.has_value()) {
    const int rb = rank(b);
    return makeProfile(std::min(m, rm1), rm1 - 2 * rb, im1.plus, im1.plus - rb, im1.minus,
                       im1.minus - rb, m);
  }
  if (c->cols() != m) fail(Errc::DimensionMismatch, "skew pair: C column count");
  const Matrix cs = c->adjoint();
  if (!rangeIncluded(b, cs))
    fail(Errc::RangeHypothesisViolated, "skew pair: range(B) must lie in range(C*)");
  const int p = c->rows();
  const int racs = rank(hcat(a, cs));
  const int rBord = rank(blockGrid({{a, b}, {*c, zeros(p, nb)}}));
  return makeProfile(std::min(racs, rm1), 2 * racs + rm1 - 2 * rBord, im1.plus,
                     racs + im1.plus - rBord, im1.minus, racs + im1.minus - rBord, m);
}

ExtremalProfile profileTwoCongruence(const CongruenceEqSpec& spec1,
                                     const CongruenceEqSpec& spec2) {
  if (spec1.a.cols() != spec2.a.cols())
    fail(Errc::DimensionMismatch, "two congruences: unknown orders differ");
  if (!checkCongruence(spec1).solvable || !checkCongruence(spec2).solvable)
    fail(Errc::Unsolvable, "two congruences: both equations must be solvable");
  const int n = spec1.a.cols();
  const Inertia im = inertia(
      assembleNamedBlock(BlockName::MTwoCongruence, {spec1.a, spec1.b, spec2.a, spec2.b}).matrix);
  const int ra1 = rank(spec1.a), ra2 = rank(spec2.a);
  const int rstack = rank(hcat(spec1.a.adjoint(), spec2.a.adjoint()));
  return makeProfile(std::min(n, im.rank() + 2 * n - 2 * ra1 - 2 * ra2), im.rank() - 2 * rstack,
                     im.plus + n - ra1 - ra2, im.plus - rstack, im.minus + n - ra1 - ra2,
                     im.minus - rstack, n);
}

ExtremalProfile profileLinearVsP(const LinearEqSpec& spec, const Matrix& p) {
  const int n = spec.a.cols();
  if (p.rows() != n || p.cols() != n) fail(Errc::DimensionMismatch, "reference point order");
  if (!p.isHermitian()) fail(Errc::NotHermitian, "reference point must be Hermitian");
  if (!checkLinearHermitian(spec).solvable)
    fail(Errc::Unsolvable, "no Hermitian solution to compare against");
  const Matrix bp = spec.b - spec.a * p;
  const Matrix g = spec.b * spec.a.adjoint() - spec.a * p * spec.a.adjoint();
  const int rbp = rank(bp), ra = rank(spec.a);
  const Inertia ig = inertia(g);
  return makeProfile(rbp - ra + n, 2 * rbp - ig.rank(), ig.plus - ra + n, rbp - ig.minus,
                     ig.minus - ra + n, rbp - ig.plus, n);
}

ExtremalProfile profilePsdLinearVsP(const LinearEqSpec& spec, const Matrix& p) {
  const int n = spec.a.cols();
  if (p.rows() != n || p.cols() != n) fail(Errc::DimensionMismatch, "reference point order");
  if (!p.isHermitian() || !isPsd(p)) fail(Errc::NotPsd, "reference point must be psd");
  if (!checkLinearPsd(spec).solvable) fail(Errc::Unsolvable, "no psd solution to compare against");
  const Matrix m = assembleNamedBlock(BlockName::MPsdVsP, {spec.a, spec.b, p}).matrix;
  const Matrix g = spec.b * spec.a.adjoint() - spec.a * p * spec.a.adjoint();
  const int rbp = rank(spec.b - spec.a * p);
  const int ra = rank(spec.a), rb = rank(spec.b);
  const Inertia im = inertia(m);
  const Inertia ig = inertia(g);
  return makeProfile(rbp - ra + n, im.minus + rbp - ig.plus, ig.plus - ra + n, im.minus,
                     im.plus - rb, rbp - ig.plus, n);
}

ExtremalProfile profileTwoLinear(const LinearEqSpec& spec1, const LinearEqSpec& spec2) {
  if (spec1.a.cols() != spec2.a.cols())
    fail(Errc::DimensionMismatch, "two equations: unknown orders differ");
  if (!checkLinearHermitian(spec1).solvable || !checkLinearHermitian(spec2).solvable)
    fail(Errc::Unsolvable, "two equations: both must have Hermitian solutions");
  const int n = spec1.a.cols();
  const Matrix &a = spec1.a, &b = spec1.b, &c = spec2.a, &d = spec2.b;
  const Inertia im = inertia(assembleNamedBlock(BlockName::MTwoLinear, {a, b, c, d}).matrix);
  const int rn = rank(assembleNamedBlock(BlockName::NTwoLinear, {a, b, c, d}).matrix);
  const int ra = rank(a), rc = rank(c);
  const int rk1 = rank(blockGrid({{a, b * a.adjoint()}, {c, d * a.adjoint()}}));
  const int rk2 = rank(blockGrid({{a, b * c.adjoint()}, {c, d * c.adjoint()}}));
  const int rcross = rank(a * d.adjoint() - b * c.adjoint());
  return makeProfile(n + rn - ra - rc, 2 * rn + rcross - rk1 - rk2, n + im.plus - ra - rc,
                     rn - im.minus, n + im.minus - ra - rc, rn - im.plus, n);
}

ExtremalProfile profileLsVsLr(const CongruenceEqSpec& spec) {
  const Matrix &a = spec.a, &b = spec.b;
  const int n = a.cols();
  const Inertia im = inertia(assembleNamedBlock(BlockName::MLsLr, {a, b}).matrix);
  const Inertia in_ = inertia(assembleNamedBlock(BlockName::NLsLr, {a, b}).matrix);
  const int ra = rank(a), rab = rank(hcat(a, b));
  const ExtremalProfile general = makeProfile(
      std::min(n, 2 * n + in_.rank() - 2 * ra - im.rank()), in_.rank() + im.rank() - 2 * rab - 2 * ra,
      in_.minus + n - ra - im.minus, in_.minus + im.plus - rab - ra, in_.plus + n - ra - im.plus,
      in_.plus + im.minus - rab - ra, n);
  if (isPsd(b)) {
    const int raba = rank(hcat(a, b * a));
    const ExtremalProfile simple =
        makeProfile(std::min(n, 2 * n + raba - 3 * ra), raba - ra, raba + n - 2 * ra, raba - ra,
                    n - ra, 0, n);
    if (!(simple == general))
      fail(Errc::RouteDisagreement, "least-squares vs least-rank: psd shortcut disagrees");
  }
  return general;
}

}  // namespace hermeq

#include "hermeq/blocks.hpp"

#include "hermeq/error.hpp"

namespace hermeq {

namespace {

void needInputs(BlockName name, const std::vector<Matrix>& in, std::size_t n) {
  if (in.size() != n)
    fail(Errc::DimensionMismatch, std::string(blockNameStr(name)) + " takes " +
                                      std::to_string(n) + " matrices, got " +
                                      std::to_string(in.size()));
}

IdentityReport report(std::string name, int lhs, int rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs == rhs;
  return r;
}

IdentityReport report(std::string name, const Inertia& lhs, const Inertia& rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs == rhs;
  return r;
}

// Predicted signature of a Hermitian matrix of the given order from its
// predicted plus/minus counts; the zero count is what's left over.
Inertia predicted(int plus, int minus, int order) { return Inertia{plus, minus, order - plus - minus}; }

}  // namespace

const char* blockNameStr(BlockName n) {
  switch (n) {
    case BlockName::M1Bordered: return "M1Bordered";
    case BlockName::M2Bordered: return "M2Bordered";
    case BlockName::MTwoCongruence: return "MTwoCongruence";
    case BlockName::NTwoLinear: return "NTwoLinear";
    case BlockName::MTwoLinear: return "MTwoLinear";
    case BlockName::MPsdVsP: return "MPsdVsP";
    case BlockName::MLsLr: return "MLsLr";
    case BlockName::NLsLr: return "NLsLr";
  }
  return "UnknownBlock";
}

NamedBlock assembleNamedBlock(BlockName name, const std::vector<Matrix>& in) {
  Matrix m;
  switch (name) {
    case BlockName::M1Bordered: {
      needInputs(name, in, 2);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      m = blockGrid({{a, b}, {b.adjoint(), Matrix::zero(b.cols(), b.cols())}});
      break;
    }
    case BlockName::M2Bordered: {
      needInputs(name, in, 3);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      const Matrix& d = in[2];
      m = blockGrid({{a, b}, {b.adjoint(), d}});
      break;
    }
    case BlockName::MTwoCongruence: {
      needInputs(name, in, 4);
      const Matrix& a1 = in[0];
      const Matrix& b1 = in[1];
      const Matrix& a2 = in[2];
      const Matrix& b2 = in[3];
      int p1 = a1.rows(), p2 = a2.rows(), n = a1.cols();
      m = blockGrid({{b1, Matrix::zero(p1, p2), a1},
                     {Matrix::zero(p2, p1), -b2, a2},
                     {a1.adjoint(), a2.adjoint(), Matrix::zero(n, n)}});
      break;
    }
    case BlockName::NTwoLinear: {
      needInputs(name, in, 4);
      m = blockGrid({{in[0], in[1]}, {in[2], in[3]}});
      break;
    }
    case BlockName::MTwoLinear: {
      needInputs(name, in, 4);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      const Matrix& c = in[2];
      const Matrix& d = in[3];
      int ma = a.rows(), mc = c.rows(), n = a.cols();
      m = blockGrid({{a * b.adjoint(), Matrix::zero(ma, mc), a},
                     {Matrix::zero(mc, ma), -(c * d.adjoint()), c},
                     {a.adjoint(), c.adjoint(), Matrix::zero(n, n)}});
      break;
    }
    case BlockName::MPsdVsP: {
      needInputs(name, in, 3);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      const Matrix& p = in[2];
      m = blockGrid({{a * b.adjoint(), b}, {b.adjoint(), p}});
      break;
    }
    case BlockName::MLsLr: {
      needInputs(name, in, 2);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      m = blockGrid({{b, a}, {a.adjoint(), Matrix::zero(a.cols(), a.cols())}});
      break;
    }
    case BlockName::NLsLr: {
      needInputs(name, in, 2);
      const Matrix& a = in[0];
      const Matrix& b = in[1];
      int n = a.cols();
      m = blockGrid({{b, b * a, a},
                     {a.adjoint() * b, Matrix::zero(n, n), Matrix::zero(n, n)},
                     {a.adjoint(), Matrix::zero(n, n), Matrix::zero(n, n)}});
      break;
    }
  }
  if (name != BlockName::NTwoLinear && !m.isHermitian())
    fail(Errc::NotHermitian, std::string(blockNameStr(name)) + " assembled non-Hermitian");
  return NamedBlock{name, std::move(m)};
}

std::vector<IdentityReport> rankExpansionReport(const Matrix& a, const Matrix& b, const Matrix& c,
                                                const Matrix&) {
  PinvBundle pa = pinv(a);
  PinvBundle pb = pinv(b);
  PinvBundle pc = pinv(c);
  int rowCat = rank(hcat(a, b));
  int colCat = rank(vcat(a, c));
  int bordered = rank(blockGrid({{a, b}, {c, Matrix::zero(c.rows(), b.cols())}}));
  std::vector<IdentityReport> out;
  out.push_back(report("r[A,B] = r(A)+r(E_A B)", rowCat, pa.rank + rank(pa.eProj * b)));
  out.push_back(report("r[A,B] = r(B)+r(E_B A)", rowCat, pb.rank + rank(pb.eProj * a)));
  out.push_back(report("r[A;C] = r(A)+r(C F_A)", colCat, pa.rank + rank(c * pa.fProj)));
  out.push_back(report("r[A;C] = r(C)+r(A F_C)", colCat, pc.rank + rank(a * pc.fProj)));
  out.push_back(report("r[A B;C 0] = r(B)+r(C)+r(E_B A F_C)", bordered,
                       pb.rank + pc.rank + rank(pb.eProj * a * pc.fProj)));
  return out;
}

std::vector<IdentityReport> inertiaExpansionReport(const Matrix& a, const Matrix& b,
                                                   const Matrix& d) {
  if (!a.isHermitian()) fail(Errc::NotHermitian, "inertiaExpansionReport: A");
  if (!d.isHermitian()) fail(Errc::NotHermitian, "inertiaExpansionReport: D");
  int m = a.rows(), n = b.cols();
  PinvBundle pa = pinv(a);
  PinvBundle pb = pinv(b);
  Matrix m1 = assembleNamedBlock(BlockName::M1Bordered, {a, b}).matrix;
  Matrix m2 = assembleNamedBlock(BlockName::M2Bordered, {a, b, d}).matrix;
  Inertia i1 = inertia(m1);
  Inertia i2 = inertia(m2);

  std::vector<IdentityReport> out;
  Inertia core = inertia(pb.eProj * a * pb.eProj);
  out.push_back(report("i[A B;B* 0] = r(B)+i(E_B A E_B)", i1,
                       predicted(pb.rank + core.plus, pb.rank + core.minus, m + n)));

  Matrix schur = d - b.adjoint() * pa.pinv * b;
  Matrix tail = blockGrid(
      {{Matrix::zero(m, m), pa.eProj * b}, {b.adjoint() * pa.eProj, schur}});
  Inertia ia = inertia(a);
  Inertia it = inertia(tail);
  out.push_back(report("i[A B;B* D] = i(A)+i[0 E_A B;B* E_A D-B* A+ B]", i2,
                       predicted(ia.plus + it.plus, ia.minus + it.minus, m + n)));

  if (isPsd(a)) {
    out.push_back(report("psd A: i[A B;B* 0] = (r[A,B], r(B))", i1,
                         predicted(rank(hcat(a, b)), pb.rank, m + n)));
  }
  if (rangeIncluded(b, a)) {
    Inertia is = inertia(schur);
    out.push_back(report("R(B)<=R(A): i[A B;B* D] = i(A)+i(D-B* A+ B)", i2,
                         predicted(ia.plus + is.plus, ia.minus + is.minus, m + n)));
  }
  return out;
}

std::vector<IdentityReport> projectorExpansionReport(const Matrix& a, const Matrix& b,
                                                     const Matrix& c, const Matrix& d,
                                                     const Matrix& p, const Matrix& q) {
  if (!a.isHermitian()) fail(Errc::NotHermitian, "projectorExpansionReport: A");
  if (!d.isHermitian()) fail(Errc::NotHermitian, "projectorExpansionReport: D");
  int aa = a.rows(), k = b.cols(), cc = c.rows();
  if (c.cols() != aa || p.rows() != cc || p.cols() != k || q.rows() != aa || q.cols() != k ||
      d.rows() != k || b.rows() != aa)
    fail(Errc::DimensionMismatch, "projectorExpansionReport layout");
  PinvBundle pp = pinv(p);
  PinvBundle pq = pinv(q);
  std::vector<IdentityReport> out;

  int l32 = rank(blockGrid({{a, b}, {pp.eProj * c, Matrix::zero(cc, k)}}));
  int r32 = rank(blockGrid({{a, b, Matrix::zero(aa, k)}, {c, Matrix::zero(cc, k), p}}));
  out.push_back(report("r[A B;E_P C 0] = r[A B 0;C 0 P]-r(P)", l32, r32 - pp.rank));

  int l33 = rank(blockGrid({{a, b * pq.fProj}, {c, Matrix::zero(cc, k)}}));
  int r33 = rank(blockGrid({{a, b}, {c, Matrix::zero(cc, k)}, {Matrix::zero(aa, aa), q}}));
  out.push_back(report("r[A BF_Q;C 0] = r[A B;C 0;0 Q]-r(Q)", l33, r33 - pq.rank));

  int l34 = rank(blockGrid({{a, b * pq.fProj}, {pp.eProj * c, Matrix::zero(cc, k)}}));
  int r34 = rank(blockGrid({{a, b, Matrix::zero(aa, k)},
                            {c, Matrix::zero(cc, k), p},
                            {Matrix::zero(aa, aa), q, Matrix::zero(aa, k)}}));
  out.push_back(
      report("r[A BF_Q;E_P C 0] = r[A B 0;C 0 P;0 Q 0]-r(P)-r(Q)", l34, r34 - pp.rank - pq.rank));

  Matrix fp = pinv(p).fProj;  // order k
  Inertia l35 = inertia(blockGrid(
      {{a, b * fp}, {fp * b.adjoint(), Matrix::zero(k, k)}}));
  Inertia r35 = inertia(blockGrid({{a, b, Matrix::zero(aa, cc)},
                                   {b.adjoint(), Matrix::zero(k, k), p.adjoint()},
                                   {Matrix::zero(cc, aa), p, Matrix::zero(cc, cc)}}));
  out.push_back(report("i[A BF_P;F_P B* 0] = i[A B 0;B* 0 P*;0 P 0]-r(P)", l35,
                       predicted(r35.plus - pp.rank, r35.minus - pp.rank, aa + k)));

  Matrix eq = pq.eProj;  // order aa
  Inertia l36 = inertia(blockGrid({{eq * a * eq, eq * b}, {b.adjoint() * eq, d}}));
  Inertia r36 = inertia(blockGrid({{a, b, q},
                                   {b.adjoint(), d, Matrix::zero(k, k)},
                                   {q.adjoint(), Matrix::zero(k, k), Matrix::zero(k, k)}}));
  out.push_back(report("i[E_Q A E_Q E_Q B;B* E_Q D] = i[A B Q;B* D 0;Q* 0 0]-r(Q)", l36,
                       predicted(r36.plus - pq.rank, r36.minus - pq.rank, aa + k)));
  return out;
}

std::vector<IdentityReport> inertiaSplitReport(const Matrix& a, const Matrix& b, const Matrix& q) {
  if (!a.isHermitian() || !b.isHermitian()) fail(Errc::NotHermitian, "inertiaSplitReport");
  int m = a.rows(), n = b.rows();
  Inertia ia = inertia(a);
  Inertia ib = inertia(b);
  Inertia sum = inertia(blockGrid({{a, Matrix::zero(m, n)}, {Matrix::zero(n, m), b}}));
  std::vector<IdentityReport> out;
  out.push_back(report("i(diag(A,B)) = i(A)+i(B)", sum,
                       predicted(ia.plus + ib.plus, ia.minus + ib.minus, m + n)));
  int rq = rank(q);
  Inertia hyp = inertia(blockGrid({{Matrix::zero(q.rows(), q.rows()), q},
                                   {q.adjoint(), Matrix::zero(q.cols(), q.cols())}}));
  out.push_back(
      report("i[0 Q;Q* 0] = (r(Q), r(Q))", hyp, predicted(rq, rq, q.rows() + q.cols())));
  return out;
}

}  // namespace hermeq

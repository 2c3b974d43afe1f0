#include "hermeq/verdicts.hpp"

#include <algorithm>

#include "hermeq/blocks.hpp"
#include "hermeq/error.hpp"

namespace hermeq {

const char* relationStr(Relation r) {
  switch (r) {
    case Relation::Succ: return "succ";
    case Relation::Succeq: return "succeq";
    case Relation::Prec: return "prec";
    case Relation::Preceq: return "preceq";
    case Relation::Nonsingular: return "nonsingular";
    case Relation::Equal: return "equal";
    case Relation::RankInvariant: return "rank-invariant";
    case Relation::InertiaInvariant: return "inertia-invariant";
  }
  return "?";
}

const char* modeStr(Mode m) { return m == Mode::Exists ? "exists" : "forall"; }

namespace {

using Ev = std::vector<std::pair<std::string, long>>;

struct Closed {
  bool holds = false;
  std::string route;
};

// Compares the closed condition against the profile reading of the same
// statement; any mismatch means one of the two formula sets is wrong.
Verdict crossCheck(const OrderingQuery& q, const Closed& closed, const ExtremalProfile& pr,
                   Ev ev) {
  const Verdict viaProfile = decideFromProfile(pr, q);
  if (viaProfile.holds != closed.holds)
    fail(Errc::RouteDisagreement, std::string("profile route contradicts: ") + closed.route);
  Verdict v;
  v.query = q;
  v.holds = closed.holds;
  v.route = closed.route;
  v.evidence = std::move(ev);
  return v;
}

Closed profileInvariance(const ExtremalProfile& pr, Relation r) {
  if (r == Relation::RankInvariant)
    return {pr.maxRank == pr.minRank, "rank extrema coincide"};
  return {pr.maxIPlus == pr.minIPlus && pr.maxIMinus == pr.minIMinus,
          "inertia extrema coincide"};
}

[[noreturn]] void unsupported(const char* what) { fail(Errc::UnsupportedQuery, what); }

}  // namespace

Verdict decideFromProfile(const ExtremalProfile& pr, const OrderingQuery& q) {
  const int n = pr.ambientOrder;
  const bool ex = q.mode == Mode::Exists;
  bool holds = false;
  switch (q.relation) {
    case Relation::Succ: holds = ex ? pr.maxIPlus == n : pr.minIPlus == n; break;
    case Relation::Prec: holds = ex ? pr.maxIMinus == n : pr.minIMinus == n; break;
    case Relation::Succeq: holds = ex ? pr.minIMinus == 0 : pr.maxIMinus == 0; break;
    case Relation::Preceq: holds = ex ? pr.minIPlus == 0 : pr.maxIPlus == 0; break;
    case Relation::Nonsingular: holds = ex ? pr.maxRank == n : pr.minRank == n; break;
    case Relation::Equal:
      if (!ex) unsupported("forall-equal cannot be read off a difference profile");
      holds = pr.minRank == 0;
      break;
    case Relation::RankInvariant: holds = pr.maxRank == pr.minRank; break;
    case Relation::InertiaInvariant:
      holds = pr.maxIPlus == pr.minIPlus && pr.maxIMinus == pr.minIMinus;
      break;
  }
  Verdict v;
  v.query = q;
  v.holds = holds;
  v.route = "profile";
  v.evidence = {{"maxRank", pr.maxRank},     {"minRank", pr.minRank},
                {"maxIPlus", pr.maxIPlus},   {"minIPlus", pr.minIPlus},
                {"maxIMinus", pr.maxIMinus}, {"minIMinus", pr.minIMinus},
                {"order", n}};
  return v;
}

Verdict decideLinearVsP(const LinearEqSpec& spec, const Matrix& p, const OrderingQuery& q) {
  const ExtremalProfile pr = profileLinearVsP(spec, p);
  const int n = spec.a.cols();
  const Matrix bp = spec.b - spec.a * p;
  const Matrix g = spec.b * spec.a.adjoint() - spec.a * p * spec.a.adjoint();
  const int ra = rank(spec.a), rbp = rank(bp);
  const Inertia ig = inertia(g);
  const bool gPsd = ig.minus == 0, gNsd = ig.plus == 0;
  const bool ex = q.mode == Mode::Exists;

  Closed c;
  switch (q.relation) {
    case Relation::Nonsingular:
      c = ex ? Closed{rangeEqual(bp, spec.a), "range(B-AP) = range(A)"}
             : Closed{2 * rbp == ig.rank() + n, "2 r(B-AP) = r(G) + n"};
      break;
    case Relation::Succ:
      c = ex ? Closed{rangeEqual(g, spec.a) && gPsd, "range(G) = range(A) and G psd"}
             : Closed{rbp == n && gPsd, "r(B-AP) = n and G psd"};
      break;
    case Relation::Prec:
      c = ex ? Closed{rangeEqual(g, spec.a) && gNsd, "range(G) = range(A) and -G psd"}
             : Closed{rbp == n && gNsd, "r(B-AP) = n and -G psd"};
      break;
    case Relation::Succeq:
      c = ex ? Closed{rangeEqual(bp, g) && gPsd, "range(B-AP) = range(G) and G psd"}
             : Closed{gPsd && ra == n, "G psd and r(A) = n"};
      break;
    case Relation::Preceq:
      c = ex ? Closed{rangeEqual(bp, g) && gNsd, "range(B-AP) = range(G) and -G psd"}
             : Closed{gNsd && ra == n, "-G psd and r(A) = n"};
      break;
    case Relation::Equal:
      c = {ex && spec.b == spec.a * p, "AP = B"};
      break;
    default:
      c = profileInvariance(pr, q.relation);
  }
  return crossCheck(q, c, pr,
                    {{"rank(A)", ra},
                     {"rank(B-AP)", rbp},
                     {"iplus(G)", ig.plus},
                     {"iminus(G)", ig.minus},
                     {"order", n}});
}

Verdict decidePsdLinearVsP(const LinearEqSpec& spec, const Matrix& p, const OrderingQuery& q) {
  const ExtremalProfile pr = profilePsdLinearVsP(spec, p);
  const int n = spec.a.cols();
  const Matrix m = assembleNamedBlock(BlockName::MPsdVsP, {spec.a, spec.b, p}).matrix;
  const Matrix bp = spec.b - spec.a * p;
  const Matrix g = spec.b * spec.a.adjoint() - spec.a * p * spec.a.adjoint();
  const int ra = rank(spec.a), rb = rank(spec.b), rbp = rank(bp);
  const Inertia im = inertia(m);
  const Inertia ig = inertia(g);
  const bool gPsd = ig.minus == 0, gNsd = ig.plus == 0;
  const bool ex = q.mode == Mode::Exists;

  Closed c;
  switch (q.relation) {
    case Relation::Nonsingular:
      c = ex ? Closed{rangeEqual(bp, spec.a), "range(B-AP) = range(A)"}
             : Closed{im.minus + rbp == ig.plus + n, "iminus(M) + r(B-AP) = iplus(G) + n"};
      break;
    case Relation::Succ:
      c = ex ? Closed{rangeEqual(g, spec.a) && gPsd, "range(G) = range(A) and G psd"}
             : Closed{im.minus == n, "iminus(M) = n"};
      break;
    case Relation::Prec:
      c = ex ? Closed{im.plus == rb + n, "iplus(M) = r(B) + n"}
             : Closed{rbp == n && gNsd, "r(B-AP) = n and -G psd"};
      break;
    case Relation::Succeq:
      c = ex ? Closed{rangeEqual(bp, g) && gPsd, "range(B-AP) = range(G) and G psd"}
             : Closed{im.plus == rb, "iplus(M) = r(B)"};
      break;
    case Relation::Preceq:
      c = ex ? Closed{im.minus == 0, "M psd"}
             : Closed{ra == n && ig.plus == 0, "r(A) = n and iplus(G) = 0"};
      break;
    case Relation::Equal:
      c = {ex && spec.b == spec.a * p, "AP = B"};
      break;
    default:
      c = profileInvariance(pr, q.relation);
  }
  return crossCheck(q, c, pr,
                    {{"rank(A)", ra},
                     {"rank(B)", rb},
                     {"rank(B-AP)", rbp},
                     {"iplus(M)", im.plus},
                     {"iminus(M)", im.minus},
                     {"iplus(G)", ig.plus},
                     {"iminus(G)", ig.minus},
                     {"order", n}});
}

Verdict decideTwoLinear(const LinearEqSpec& spec1, const LinearEqSpec& spec2,
                        const OrderingQuery& q) {
  const ExtremalProfile pr = profileTwoLinear(spec1, spec2);
  const int n = spec1.a.cols();
  const Matrix &a = spec1.a, &b = spec1.b, &c2 = spec2.a, &d = spec2.b;
  const Inertia im = inertia(assembleNamedBlock(BlockName::MTwoLinear, {a, b, c2, d}).matrix);
  const int rn = rank(assembleNamedBlock(BlockName::NTwoLinear, {a, b, c2, d}).matrix);
  const int ra = rank(a), rc = rank(c2);
  const int rk1 = rank(blockGrid({{a, b * a.adjoint()}, {c2, d * a.adjoint()}}));
  const int rk2 = rank(blockGrid({{a, b * c2.adjoint()}, {c2, d * c2.adjoint()}}));
  const int rcross = rank(a * d.adjoint() - b * c2.adjoint());
  const bool ex = q.mode == Mode::Exists;

  Closed c;
  std::optional<Matrix> witness;
  switch (q.relation) {
    case Relation::Nonsingular:
      c = ex ? Closed{rn == ra + rc, "r[A B; C D] = r(A) + r(C)"}
             : Closed{2 * rn + rcross == rk1 + rk2 + n,
                      "2 r[A B; C D] + r(AD*-BC*) = r(K1) + r(K2) + n"};
      break;
    case Relation::Succ:
      c = ex ? Closed{im.plus == ra + rc, "iplus(M) = r(A) + r(C)"}
             : Closed{im.minus == rn - n, "iminus(M) = r[A B; C D] - n"};
      break;
    case Relation::Prec:
      c = ex ? Closed{im.minus == ra + rc, "iminus(M) = r(A) + r(C)"}
             : Closed{im.plus == rn - n, "iplus(M) = r[A B; C D] - n"};
      break;
    case Relation::Succeq:
      c = ex ? Closed{im.plus == rn, "iplus(M) = r[A B; C D]"}
             : Closed{im.minus == ra + rc - n, "iminus(M) = r(A) + r(C) - n"};
      break;
    case Relation::Preceq:
      c = ex ? Closed{im.minus == rn, "iminus(M) = r[A B; C D]"}
             : Closed{im.plus == ra + rc - n, "iplus(M) = r(A) + r(C) - n"};
      break;
    case Relation::Equal: {
      if (ex) {
        const LinearEqSpec stacked = makeLinearSpec(vcat(a, c2), vcat(b, d));
        const bool solvable = checkLinearHermitian(stacked).solvable;
        c = {solvable, "the stacked system [A; C] X = [B; D] has a Hermitian solution"};
        if (solvable) witness = hermitianSolution(stacked, Matrix::zero(n, n));
      } else {
        c = {false, "unsupported"};
      }
      break;
    }
    default:
      c = profileInvariance(pr, q.relation);
  }
  Verdict v = crossCheck(q, c, pr,
                         {{"rank(A)", ra},
                          {"rank(C)", rc},
                          {"rank[A B; C D]", rn},
                          {"iplus(M)", im.plus},
                          {"iminus(M)", im.minus},
                          {"order", n}});
  v.witness = std::move(witness);
  return v;
}

Verdict decideTwoCongruence(const CongruenceEqSpec& spec1, const CongruenceEqSpec& spec2,
                            const OrderingQuery& q) {
  const ExtremalProfile pr = profileTwoCongruence(spec1, spec2);
  const int n = spec1.a.cols();
  const Inertia im = inertia(
      assembleNamedBlock(BlockName::MTwoCongruence, {spec1.a, spec1.b, spec2.a, spec2.b}).matrix);
  const int rm = im.rank();
  const int ra1 = rank(spec1.a), ra2 = rank(spec2.a);
  const int rstack = rank(hcat(spec1.a.adjoint(), spec2.a.adjoint()));
  const bool ex = q.mode == Mode::Exists;

  Closed c;
  switch (q.relation) {
    case Relation::Nonsingular:
      c = ex ? Closed{rm >= 2 * ra1 + 2 * ra2 - n, "r(M) >= 2 r(A1) + 2 r(A2) - n"}
             : Closed{rm == 2 * rstack + n, "r(M) = 2 r[A1*, A2*] + n"};
      break;
    case Relation::Succ:
      c = ex ? Closed{im.plus == ra1 + ra2, "iplus(M) = r(A1) + r(A2)"}
             : Closed{im.plus == rstack + n, "iplus(M) = r[A1*, A2*] + n"};
      break;
    case Relation::Prec:
      c = ex ? Closed{im.minus == ra1 + ra2, "iminus(M) = r(A1) + r(A2)"}
             : Closed{im.minus == rstack + n, "iminus(M) = r[A1*, A2*] + n"};
      break;
    case Relation::Succeq:
      c = ex ? Closed{im.minus == rstack, "iminus(M) = r[A1*, A2*]"}
             : Closed{im.minus == ra1 + ra2 - n, "iminus(M) = r(A1) + r(A2) - n"};
      break;
    case Relation::Preceq:
      c = ex ? Closed{im.plus == rstack, "iplus(M) = r[A1*, A2*]"}
             : Closed{im.plus == ra1 + ra2 - n, "iplus(M) = r(A1) + r(A2) - n"};
      break;
    case Relation::Equal:
      c = {ex && rm == 2 * rstack, "r(M) = 2 r[A1*, A2*]"};
      if (!ex) c.route = "unsupported";
      break;
    case Relation::RankInvariant:
      c = {rm == 2 * rstack + n || (ra1 == n && ra2 == n),
           "r(M) = 2 r[A1*, A2*] + n, or both A1 and A2 have full column rank"};
      break;
    case Relation::InertiaInvariant:
      c = {ra1 == n && ra2 == n, "both A1 and A2 have full column rank"};
      break;
  }
  return crossCheck(q, c, pr,
                    {{"rank(A1)", ra1},
                     {"rank(A2)", ra2},
                     {"rank[A1*, A2*]", rstack},
                     {"iplus(M)", im.plus},
                     {"iminus(M)", im.minus},
                     {"order", n}});
}

Verdict decideTransformedSetEquality(const CongruenceEqSpec& spec, const Matrix& t) {
  if (t.cols() != spec.a.rows())
    fail(Errc::DimensionMismatch, "transform column count must match equation rows");
  if (!checkCongruence(spec).solvable)
    fail(Errc::Unsolvable, "the original equation has no Hermitian solution");
  const int ra = rank(spec.a), rta = rank(t * spec.a);
  const bool holds = rta == ra;
  // Independent reading: the worst-case distance from a transformed solution
  // back to the original set is min{r(A), 2 r(A) - 2 r(TA)}.
  const int worst = std::min(ra, 2 * ra - 2 * rta);
  if ((worst == 0) != holds) fail(Errc::RouteDisagreement, "set-equality routes disagree");
  Verdict v;
  v.query = {Relation::Equal, Mode::Exists};
  v.holds = holds;
  v.route = "rank(TA) = rank(A); the original set is always contained in the transformed set";
  v.evidence = {{"rank(A)", ra}, {"rank(TA)", rta}, {"order", spec.a.cols()}};
  return v;
}

Verdict decideTransformedOrdering(const CongruenceEqSpec& spec, const Matrix& t,
                                  const OrderingQuery& q) {
  if (q.relation == Relation::Equal) return decideTransformedSetEquality(spec, t);
  if (q.relation == Relation::Nonsingular || q.relation == Relation::RankInvariant ||
      q.relation == Relation::InertiaInvariant)
    unsupported("only order relations are decidable for the transformed pair");
  if (q.mode == Mode::Forall)
    unsupported("only exists-mode statements are decidable for the transformed pair");
  if (t.cols() != spec.a.rows())
    fail(Errc::DimensionMismatch, "transform column count must match equation rows");
  if (!checkCongruence(spec).solvable)
    fail(Errc::Unsolvable, "the original equation has no Hermitian solution");
  const int n = spec.a.cols();
  const Matrix ta = t * spec.a;
  const int rta = rank(ta);

  Closed c;
  if (q.relation == Relation::Succ || q.relation == Relation::Prec)
    c = {ta.isZero(), "TA = 0"};
  else
    c = {true, "always holds"};
  // Extremal inertias of X - Y over the two sets: max = n - r(TA), min = 0.
  const ExtremalProfile pr{std::min(n, 2 * (n - rta)), 0, n - rta, 0, n - rta, 0, n};
  return crossCheck(q, c, pr, {{"rank(A)", rank(spec.a)}, {"rank(TA)", rta}, {"order", n}});
}

namespace {

Verdict averageVerdict(const CongruenceEqSpec& spec, const Matrix& t1a, const Matrix& t2a,
                       std::string route, Ev extra) {
  const int ra = rank(spec.a);
  const int r1 = rank(t1a), r2 = rank(t2a);
  const int rstack = rank(vcat(t1a, t2a));
  const bool holds = rstack == r1 + r2 - ra;
  // Independent reading: the worst-case distance from an average back to the
  // original set is min{r(A), 2 (r[T1A; T2A] + r(A) - r(T1A) - r(T2A))}.
  const int worst = std::min(ra, 2 * (rstack + ra - r1 - r2));
  if ((worst == 0) != holds) fail(Errc::RouteDisagreement, "average-equality routes disagree");
  Verdict v;
  v.query = {Relation::Equal, Mode::Exists};
  v.holds = holds;
  v.route = std::move(route);
  v.evidence = {{"rank(A)", ra},
                {"rank(T1A)", r1},
                {"rank(T2A)", r2},
                {"rank[T1A; T2A]", rstack},
                {"order", spec.a.cols()}};
  for (auto& e : extra) v.evidence.push_back(std::move(e));
  return v;
}

}  // namespace

Verdict decideAverageEquality(const CongruenceEqSpec& spec, const Matrix& t1, const Matrix& t2) {
  if (t1.cols() != spec.a.rows() || t2.cols() != spec.a.rows())
    fail(Errc::DimensionMismatch, "transform column counts must match equation rows");
  if (!checkCongruence(spec).solvable)
    fail(Errc::Unsolvable, "the original equation has no Hermitian solution");
  return averageVerdict(spec, t1 * spec.a, t2 * spec.a,
                        "r[T1A; T2A] = r(T1A) + r(T2A) - r(A)", {});
}

Verdict decideAveragePartition(const CongruenceEqSpec& spec, int m1) {
  const int m = spec.a.rows();
  if (m1 < 1 || m1 > m - 1) fail(Errc::DimensionMismatch, "row split must be interior");
  if (!checkCongruence(spec).solvable)
    fail(Errc::Unsolvable, "the original equation has no Hermitian solution");
  const Matrix a1 = spec.a.topRows(m1);
  const Matrix a2 = spec.a.sub(m1, 0, m - m1, spec.a.cols());
  Verdict v = averageVerdict(spec, a1, a2, "range(A1*) = range(A2*)", {});
  if (v.holds != rangeEqual(a1.adjoint(), a2.adjoint()))
    fail(Errc::RouteDisagreement, "partitioned average-equality routes disagree");
  return v;
}

Verdict decideAverageSum(const CongruenceEqSpec& spec, const Matrix& a1) {
  if (a1.rows() != spec.a.rows() || a1.cols() != spec.a.cols())
    fail(Errc::DimensionMismatch, "summand must match the equation matrix");
  if (!checkCongruence(spec).solvable)
    fail(Errc::Unsolvable, "the original equation has no Hermitian solution");
  const Matrix a2 = spec.a - a1;
  const Matrix t1a = pinv(a2).eProj * spec.a;  // kills the A2 part of A
  const Matrix t2a = pinv(a1).eProj * spec.a;
  const int m = spec.a.rows(), n = spec.a.cols();
  const int rpair = rank(hcat(a1, a2));
  const int rwide = rank(blockGrid({{a1, Matrix::zero(m, n), a2},
                                    {Matrix::zero(m, n), a2, a1}}));
  Verdict v = averageVerdict(spec, t1a, t2a,
                             "r[A1 0 A2; 0 A2 A1] = 2 r[A1, A2] - r(A)",
                             {{"rank[A1, A2]", rpair}, {"rank[A1 0 A2; 0 A2 A1]", rwide}});
  if (v.holds != (rwide == 2 * rpair - rank(spec.a)))
    fail(Errc::RouteDisagreement, "sum-split average-equality routes disagree");
  if (rpair == rank(a1) + rank(a2)) {  // trivially intersecting ranges
    if (v.holds != rangeEqual(a1.adjoint(), a2.adjoint()))
      fail(Errc::RouteDisagreement, "trivial-intersection shortcut disagrees");
  }
  return v;
}

Verdict decideLsVsLr(const CongruenceEqSpec& spec, const OrderingQuery& q) {
  const ExtremalProfile pr = profileLsVsLr(spec);
  const Matrix &a = spec.a, &b = spec.b;
  const int n = a.cols();
  const Inertia im = inertia(assembleNamedBlock(BlockName::MLsLr, {a, b}).matrix);
  const Inertia in_ = inertia(assembleNamedBlock(BlockName::NLsLr, {a, b}).matrix);
  const int rm = im.rank(), rn = in_.rank();
  const int ra = rank(a), rab = rank(hcat(a, b));
  const bool ex = q.mode == Mode::Exists;

  Closed c;
  switch (q.relation) {
    case Relation::Nonsingular:
      c = ex ? Closed{rn >= 2 * ra + rm - n, "r(N) >= 2 r(A) + r(M) - n"}
             : Closed{rn + rm == 2 * rab + 2 * ra + n, "r(N) + r(M) = 2 r[A, B] + 2 r(A) + n"};
      break;
    case Relation::Succ:
      c = ex ? Closed{in_.minus == im.minus + ra, "iminus(N) = iminus(M) + r(A)"}
             : Closed{in_.minus == ra + rab - im.plus + n,
                      "iminus(N) = r(A) + r[A, B] - iplus(M) + n"};
      break;
    case Relation::Prec:
      c = ex ? Closed{in_.plus == im.plus + ra, "iplus(N) = iplus(M) + r(A)"}
             : Closed{in_.plus == ra + rab - im.minus + n,
                      "iplus(N) = r(A) + r[A, B] - iminus(M) + n"};
      break;
    case Relation::Succeq:
      c = ex ? Closed{in_.plus == ra + rab - im.minus, "iplus(N) = r(A) + r[A, B] - iminus(M)"}
             : Closed{in_.plus == im.plus + ra - n, "iplus(N) = iplus(M) + r(A) - n"};
      break;
    case Relation::Preceq:
      c = ex ? Closed{in_.minus == ra + rab - im.plus, "iminus(N) = r(A) + r[A, B] - iplus(M)"}
             : Closed{in_.minus == im.minus + ra - n, "iminus(N) = iminus(M) + r(A) - n"};
      break;
    case Relation::Equal:
      c = {ex && rn + rm == 2 * rab + 2 * ra, "r(N) + r(M) = 2 r[A, B] + 2 r(A)"};
      if (!ex) c.route = "unsupported";
      break;
    default:
      c = profileInvariance(pr, q.relation);
  }

  if (isPsd(b)) {
    // Short-form conditions valid under psd B; they must agree with the
    // general ones wherever both exist.
    const int raba = rank(hcat(a, b * a));
    std::optional<bool> shortcut;
    if (q.relation == Relation::Nonsingular)
      shortcut = ex ? raba >= 3 * ra - n : raba == ra + n;
    else if (q.relation == Relation::Succ)
      shortcut = ex ? raba == 2 * ra : raba == ra + n;
    else if (q.relation == Relation::Succeq)
      shortcut = ex ? true : ra == n;
    else if (q.relation == Relation::Prec && ex)
      shortcut = a.isZero();
    else if (q.relation == Relation::Preceq)
      shortcut = ex ? rangeIncluded(b * a, a) : raba == 2 * ra - n;
    else if (q.relation == Relation::Equal && ex)
      shortcut = rangeIncluded(b * a, a);
    if (shortcut.has_value() && *shortcut != c.holds)
      fail(Errc::RouteDisagreement, std::string("psd short form contradicts: ") + c.route);
  }

  return crossCheck(q, c, pr,
                    {{"rank(A)", ra},
                     {"rank[A, B]", rab},
                     {"iplus(M)", im.plus},
                     {"iminus(M)", im.minus},
                     {"iplus(N)", in_.plus},
                     {"iminus(N)", in_.minus},
                     {"order", n}});
}

}  // namespace hermeq

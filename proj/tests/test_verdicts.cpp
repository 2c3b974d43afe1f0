#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hermeq/error.hpp"
#include "hermeq/rng.hpp"
#include "hermeq/verdicts.hpp"

using namespace hermeq;

namespace {

template <typename F>
Errc codeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a hermeq::Error");
}

LinearEqSpec solvableLinear(Rng& rng, int m, int n, bool psd) {
  Matrix a = drawMatrix(rng, m, n, 3);
  Matrix x = psd ? drawPsd(rng, n, 2) : drawHermitian(rng, n, 3);
  return makeLinearSpec(a, a * x);
}

CongruenceEqSpec solvableCongruence(Rng& rng, int m, int n) {
  Matrix a = drawMatrix(rng, m, n, 3);
  Matrix x = drawHermitian(rng, n, 3);
  return makeCongruenceSpec(a, a * x * a.adjoint());
}

bool holds(const Verdict& v) { return v.holds; }

const OrderingQuery kExistsSucc{Relation::Succ, Mode::Exists};
const OrderingQuery kForallSucc{Relation::Succ, Mode::Forall};
const OrderingQuery kExistsSucceq{Relation::Succeq, Mode::Exists};
const OrderingQuery kForallSucceq{Relation::Succeq, Mode::Forall};
const OrderingQuery kExistsPrec{Relation::Prec, Mode::Exists};
const OrderingQuery kForallPrec{Relation::Prec, Mode::Forall};
const OrderingQuery kExistsPreceq{Relation::Preceq, Mode::Exists};
const OrderingQuery kForallPreceq{Relation::Preceq, Mode::Forall};
const OrderingQuery kExistsNonsing{Relation::Nonsingular, Mode::Exists};
const OrderingQuery kForallNonsing{Relation::Nonsingular, Mode::Forall};
const OrderingQuery kExistsEqual{Relation::Equal, Mode::Exists};
const OrderingQuery kRankInv{Relation::RankInvariant, Mode::Exists};
const OrderingQuery kInertiaInv{Relation::InertiaInvariant, Mode::Exists};

const std::vector<OrderingQuery> kAllQueries = {
    kExistsSucc,    kForallSucc,   kExistsSucceq, kForallSucceq, kExistsPrec,
    kForallPrec,    kExistsPreceq, kForallPreceq, kExistsNonsing, kForallNonsing,
    kExistsEqual,   kRankInv,      kInertiaInv};

}  // namespace

TEST_CASE("profile readings of statements") {
  const ExtremalProfile pr{2, 1, 2, 1, 1, 0, 2};  // diag(1, t), t free
  CHECK(holds(decideFromProfile(pr, kExistsNonsing)));
  CHECK(!holds(decideFromProfile(pr, kForallNonsing)));
  CHECK(holds(decideFromProfile(pr, kExistsSucc)));
  CHECK(!holds(decideFromProfile(pr, kForallSucc)));
  CHECK(holds(decideFromProfile(pr, kExistsSucceq)));
  CHECK(!holds(decideFromProfile(pr, kForallSucceq)));
  CHECK(!holds(decideFromProfile(pr, kExistsPrec)));
  CHECK(!holds(decideFromProfile(pr, kExistsPreceq)));
  CHECK(!holds(decideFromProfile(pr, kExistsEqual)));
  CHECK(!holds(decideFromProfile(pr, kRankInv)));
  CHECK(!holds(decideFromProfile(pr, kInertiaInv)));
  CHECK(codeOf([&] { decideFromProfile(pr, {Relation::Equal, Mode::Forall}); }) ==
        Errc::UnsupportedQuery);

  const ExtremalProfile pinned{1, 1, 1, 1, 0, 0, 1};
  CHECK(holds(decideFromProfile(pinned, kRankInv)));
  CHECK(holds(decideFromProfile(pinned, kInertiaInv)));
  CHECK(holds(decideFromProfile(pinned, kForallSucc)));
  CHECK(holds(decideFromProfile(pinned, kForallNonsing)));
}

TEST_CASE("Hermitian solutions against a reference point: frozen examples") {
  const LinearEqSpec spec =
      makeLinearSpec(Matrix::fromRows({{1, 0}}), Matrix::fromRows({{1, 0}}));
  const Matrix zero2 = Matrix::zero(2, 2);
  CHECK(holds(decideLinearVsP(spec, zero2, kExistsNonsing)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kForallNonsing)));
  CHECK(holds(decideLinearVsP(spec, zero2, kExistsSucc)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kForallSucc)));
  CHECK(holds(decideLinearVsP(spec, zero2, kExistsSucceq)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kForallSucceq)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kExistsPrec)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kExistsPreceq)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kExistsEqual)));
  CHECK(!holds(decideLinearVsP(spec, zero2, kRankInv)));

  const Matrix sol = Matrix::fromRows({{1, 0}, {0, 5}});
  CHECK(holds(decideLinearVsP(spec, sol, kExistsEqual)));
  CHECK(holds(decideLinearVsP(spec, sol, kExistsSucceq)));
}

TEST_CASE("psd solutions against a reference point: frozen examples") {
  const LinearEqSpec spec =
      makeLinearSpec(Matrix::fromRows({{1, 0}}), Matrix::fromRows({{1, 0}}));
  const Matrix zero2 = Matrix::zero(2, 2);
  CHECK(holds(decidePsdLinearVsP(spec, zero2, kExistsSucc)));
  CHECK(!holds(decidePsdLinearVsP(spec, zero2, kForallSucc)));
  CHECK(holds(decidePsdLinearVsP(spec, zero2, kForallSucceq)));
  CHECK(!holds(decidePsdLinearVsP(spec, zero2, kExistsPrec)));
  CHECK(!holds(decidePsdLinearVsP(spec, zero2, kExistsPreceq)));
  CHECK(holds(decidePsdLinearVsP(spec, zero2, kExistsNonsing)));
  CHECK(!holds(decidePsdLinearVsP(spec, zero2, kForallNonsing)));
  CHECK(!holds(decidePsdLinearVsP(spec, zero2, kExistsEqual)));
}

TEST_CASE("two linear equations: frozen examples and witness") {
  const LinearEqSpec s1 = makeLinearSpec(Matrix::fromRows({{1}}), Matrix::fromRows({{2}}));
  const LinearEqSpec s2 = makeLinearSpec(Matrix::fromRows({{1}}), Matrix::fromRows({{1}}));
  CHECK(holds(decideTwoLinear(s1, s2, kForallSucc)));
  CHECK(holds(decideTwoLinear(s1, s2, kForallNonsing)));
  CHECK(!holds(decideTwoLinear(s1, s2, kExistsEqual)));
  CHECK(!decideTwoLinear(s1, s2, kExistsEqual).witness.has_value());

  const Verdict same = decideTwoLinear(s1, s1, kExistsEqual);
  CHECK(same.holds);
  REQUIRE(same.witness.has_value());
  CHECK(s1.a * *same.witness == s1.b);
  CHECK(same.witness->isHermitian());
  CHECK(holds(decideTwoLinear(s1, s1, kForallSucceq)));
  CHECK(holds(decideTwoLinear(s1, s1, kRankInv)));
  CHECK(holds(decideTwoLinear(s1, s1, kInertiaInv)));
  CHECK(!holds(decideTwoLinear(s1, s1, kExistsSucc)));

  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    const int m = rng.nextInt(1, 3), n = rng.nextInt(1, 3), p = rng.nextInt(1, 3);
    LinearEqSpec e1 = solvableLinear(rng, m, n, false);
    LinearEqSpec e2 = solvableLinear(rng, p, n, false);
    const Verdict v = decideTwoLinear(e1, e2, kExistsEqual);
    if (v.holds) {
      REQUIRE(v.witness.has_value());
      CHECK(e1.a * *v.witness == e1.b);
      CHECK(e2.a * *v.witness == e2.b);
      CHECK(v.witness->isHermitian());
    }
  }
}

TEST_CASE("two congruence equations: frozen examples") {
  const CongruenceEqSpec s1 =
      makeCongruenceSpec(Matrix::fromRows({{1}}), Matrix::fromRows({{2}}));
  const CongruenceEqSpec s2 =
      makeCongruenceSpec(Matrix::fromRows({{1}}), Matrix::fromRows({{1}}));
  CHECK(holds(decideTwoCongruence(s1, s2, kForallSucc)));
  CHECK(holds(decideTwoCongruence(s1, s2, kExistsSucc)));
  CHECK(!holds(decideTwoCongruence(s1, s2, kExistsPrec)));
  CHECK(holds(decideTwoCongruence(s1, s2, kRankInv)));
  CHECK(holds(decideTwoCongruence(s1, s2, kInertiaInv)));
  CHECK(!holds(decideTwoCongruence(s1, s2, kExistsEqual)));
  CHECK(holds(decideTwoCongruence(s1, s1, kExistsEqual)));

  CHECK(codeOf([] {
          decideTwoCongruence(
              makeCongruenceSpec(Matrix::zero(1, 1), Matrix::fromRows({{1}})),
              makeCongruenceSpec(Matrix::identity(1), Matrix::identity(1)), kExistsSucc);
        }) == Errc::Unsolvable);
}

TEST_CASE("transformed equation: set equality") {
  const CongruenceEqSpec spec = makeCongruenceSpec(
      Matrix::fromRows({{1}, {0}}), Matrix::fromRows({{1, 0}, {0, 0}}));
  CHECK(holds(decideTransformedSetEquality(spec, Matrix::identity(2))));
  CHECK(!holds(decideTransformedSetEquality(spec, Matrix::fromRows({{0, 1}}))));
  CHECK(codeOf([&] { decideTransformedSetEquality(spec, Matrix::identity(3)); }) ==
        Errc::DimensionMismatch);
  CHECK(codeOf([] {
          decideTransformedSetEquality(
              makeCongruenceSpec(Matrix::zero(1, 1), Matrix::identity(1)),
              Matrix::identity(1));
        }) == Errc::Unsolvable);

  // A nonsingular transform never changes the solution set.
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const int m = rng.nextInt(1, 3), n = rng.nextInt(1, 3);
    CongruenceEqSpec s = solvableCongruence(rng, m, n);
    CHECK(holds(decideTransformedSetEquality(s, drawNonsingular(rng, m, 3))));
  }
}

TEST_CASE("transformed equation: order relations") {
  const CongruenceEqSpec spec = makeCongruenceSpec(
      Matrix::fromRows({{1}, {0}}), Matrix::fromRows({{1, 0}, {0, 0}}));
  CHECK(holds(decideTransformedOrdering(spec, Matrix::zero(2, 2), kExistsSucc)));
  CHECK(holds(decideTransformedOrdering(spec, Matrix::zero(2, 2), kExistsPrec)));
  CHECK(!holds(decideTransformedOrdering(spec, Matrix::identity(2), kExistsSucc)));
  CHECK(holds(decideTransformedOrdering(spec, Matrix::identity(2), kExistsSucceq)));
  CHECK(holds(decideTransformedOrdering(spec, Matrix::identity(2), kExistsPreceq)));
  CHECK(codeOf([&] { decideTransformedOrdering(spec, Matrix::identity(2), kForallSucc); }) ==
        Errc::UnsupportedQuery);
  CHECK(codeOf([&] {
          decideTransformedOrdering(spec, Matrix::identity(2), kExistsNonsing);
        }) == Errc::UnsupportedQuery);
  // relation equal routes to set equality
  CHECK(holds(decideTransformedOrdering(spec, Matrix::identity(2), kExistsEqual)));
}

TEST_CASE("averages of transformed solutions: frozen examples") {
  {  // discarding one factor only works for the zero equation
    const CongruenceEqSpec spec =
        makeCongruenceSpec(Matrix::fromRows({{1}}), Matrix::fromRows({{1}}));
    CHECK(!holds(decideAverageEquality(spec, Matrix::identity(1), Matrix::zero(1, 1))));
    CHECK(holds(decideAverageEquality(spec, Matrix::identity(1), Matrix::identity(1))));

    const CongruenceEqSpec trivial =
        makeCongruenceSpec(Matrix::zero(1, 1), Matrix::zero(1, 1));
    CHECK(holds(decideAverageEquality(trivial, Matrix::identity(1), Matrix::zero(1, 1))));
  }
  {  // row partition: equal row spaces decide it
    const CongruenceEqSpec dup = makeCongruenceSpec(
        Matrix::fromRows({{1, 0}, {1, 0}}), Matrix::fromRows({{1, 1}, {1, 1}}));
    CHECK(holds(decideAveragePartition(dup, 1)));
    const CongruenceEqSpec id2 = makeCongruenceSpec(Matrix::identity(2), Matrix::identity(2));
    CHECK(!holds(decideAveragePartition(id2, 1)));
    CHECK(codeOf([&] { decideAveragePartition(id2, 2); }) == Errc::DimensionMismatch);
  }
  {  // sum split
    const CongruenceEqSpec spec = makeCongruenceSpec(
        Matrix::fromRows({{1}, {1}}), Matrix::fromRows({{2, 2}, {2, 2}}));
    CHECK(holds(decideAverageSum(spec, Matrix::fromRows({{1}, {0}}))));

    const CongruenceEqSpec id2 = makeCongruenceSpec(Matrix::identity(2), Matrix::identity(2));
    CHECK(!holds(decideAverageSum(id2, Matrix::fromRows({{1, 0}, {0, 0}}))));
    CHECK(codeOf([&] { decideAverageSum(id2, Matrix::zero(3, 3)); }) ==
          Errc::DimensionMismatch);
  }
}

TEST_CASE("least-squares vs least-rank: frozen examples") {
  for (int n = 1; n <= 3; ++n) {
    Rng rng(300 + n);
    const CongruenceEqSpec spec = makeCongruenceSpec(Matrix::identity(n), drawHermitian(rng, n, 3));
    CHECK(holds(decideLsVsLr(spec, kExistsEqual)));
    CHECK(holds(decideLsVsLr(spec, kForallSucceq)));
    CHECK(holds(decideLsVsLr(spec, kForallPreceq)));
    CHECK(holds(decideLsVsLr(spec, kRankInv)));
    CHECK(holds(decideLsVsLr(spec, kInertiaInv)));
    CHECK(!holds(decideLsVsLr(spec, kExistsSucc)));
    CHECK(!holds(decideLsVsLr(spec, kExistsNonsing)));
  }

  const CongruenceEqSpec anti = makeCongruenceSpec(Matrix::fromRows({{1}, {0}}),
                                                   Matrix::fromRows({{0, 1}, {1, 0}}));
  CHECK(holds(decideLsVsLr(anti, kExistsSucc)));
  CHECK(holds(decideLsVsLr(anti, kExistsPrec)));
  CHECK(holds(decideLsVsLr(anti, kExistsEqual)));
  CHECK(holds(decideLsVsLr(anti, kExistsNonsing)));
  CHECK(!holds(decideLsVsLr(anti, kForallSucceq)));

  // psd right-hand side: a semidefinite-ordered pair always exists
  Rng rng(99);
  for (int it = 0; it < 20; ++it) {
    const int m = rng.nextInt(1, 3), n = rng.nextInt(1, 3);
    const CongruenceEqSpec spec = makeCongruenceSpec(drawMatrix(rng, m, n, 3), drawPsd(rng, m, 2));
    CHECK(holds(decideLsVsLr(spec, kExistsSucceq)));
  }
}

TEST_CASE("order statements are mutually consistent across random instances") {
  Rng rng(1234);
  for (int it = 0; it < 15; ++it) {
    const int m = rng.nextInt(1, 3), n = rng.nextInt(1, 3);
    std::vector<std::function<Verdict(const OrderingQuery&)>> ops;
    LinearEqSpec lin = solvableLinear(rng, m, n, false);
    Matrix p = drawHermitian(rng, n, 3);
    ops.push_back([&](const OrderingQuery& q) { return decideLinearVsP(lin, p, q); });
    LinearEqSpec psd = solvableLinear(rng, m, n, true);
    Matrix pp = drawPsd(rng, n, 2);
    ops.push_back([&](const OrderingQuery& q) { return decidePsdLinearVsP(psd, pp, q); });
    CongruenceEqSpec c1 = solvableCongruence(rng, m, n);
    CongruenceEqSpec c2 = solvableCongruence(rng, m, n);
    ops.push_back([&](const OrderingQuery& q) { return decideTwoCongruence(c1, c2, q); });
    CongruenceEqSpec lr{drawMatrix(rng, m, n, 3), drawHermitian(rng, m, 3)};
    ops.push_back([&](const OrderingQuery& q) { return decideLsVsLr(lr, q); });

    for (auto& op : ops) {
      // forall implies exists (families are nonempty), strict implies lax
      for (Relation r : {Relation::Succ, Relation::Succeq, Relation::Prec, Relation::Preceq,
                         Relation::Nonsingular}) {
        if (op({r, Mode::Forall}).holds) CHECK(op({r, Mode::Exists}).holds);
      }
      if (op(kExistsSucc).holds) CHECK(op(kExistsSucceq).holds);
      if (op(kExistsPrec).holds) CHECK(op(kExistsPreceq).holds);
      if (op(kForallSucc).holds) CHECK(op(kForallSucceq).holds);
      if (op(kForallPrec).holds) CHECK(op(kForallPreceq).holds);
      // a definite member is nonsingular
      if (op(kExistsSucc).holds) CHECK(op(kExistsNonsing).holds);
      if (op(kExistsPrec).holds) CHECK(op(kExistsNonsing).holds);
    }
  }
}

TEST_CASE("every query runs both routes without disagreement") {
  Rng rng(555);
  int decided = 0;
  for (int it = 0; it < 10; ++it) {
    const int m = rng.nextInt(1, 3), n = rng.nextInt(1, 3);
    LinearEqSpec lin = solvableLinear(rng, m, n, false);
    Matrix p = drawHermitian(rng, n, 3);
    LinearEqSpec psd = solvableLinear(rng, m, n, true);
    Matrix pp = drawPsd(rng, n, 2);
    LinearEqSpec l2 = solvableLinear(rng, rng.nextInt(1, 3), n, false);
    CongruenceEqSpec c1 = solvableCongruence(rng, m, n);
    CongruenceEqSpec c2 = solvableCongruence(rng, rng.nextInt(1, 3), n);
    CongruenceEqSpec lr{drawMatrix(rng, m, n, 3), drawHermitian(rng, m, 3)};
    for (const OrderingQuery& q : kAllQueries) {
      decideLinearVsP(lin, p, q);
      decidePsdLinearVsP(psd, pp, q);
      decideTwoLinear(lin, l2, q);
      decideTwoCongruence(c1, c2, q);
      decideLsVsLr(lr, q);
      decided += 5;
    }
  }
  CHECK(decided == 10 * static_cast<int>(kAllQueries.size()) * 5);
}

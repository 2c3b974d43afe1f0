#include "hermeq/oracle.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "hermeq/error.hpp"
#include "hermeq/rng.hpp"
#include "hermeq/verdicts.hpp"

namespace hermeq {

namespace {

constexpr int kDrawBound = 3;  // numerator/denominator bound for random parameters

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

Matrix unit(int r, int c, int i, int j, GaussianRational v) {
  Matrix m = Matrix::zero(r, c);
  m.at(i, j) = std::move(v);
  return m;
}

// Fixed parameter grids with entries in {-2..2} (and +-i off-diagonal), tried
// before any random draw so small extremal witnesses are found
// deterministically.
std::vector<Matrix> gridGeneral(int r, int c) {
  std::vector<Matrix> g{Matrix::zero(r, c)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (long s : {1L, -1L, 2L, -2L}) g.push_back(unit(r, c, i, j, gr(s)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (long s : {1L, -1L}) g.push_back(unit(r, c, i, j, gr(0, s)));
  return g;
}

std::vector<Matrix> gridHermitian(int n) {
  std::vector<Matrix> g{Matrix::zero(n, n)};
  for (long s : {1L, -1L, 2L, -2L}) g.push_back(Matrix::scalarDiag(n, gr(s)));
  for (int k = 0; k < n; ++k)
    for (long s : {1L, -1L, 2L, -2L}) g.push_back(unit(n, n, k, k, gr(s)));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      for (long s : {1L, -1L, 2L, -2L}) {
        Matrix m = Matrix::zero(n, n);
        m.at(k, l) = gr(s);
        m.at(l, k) = gr(s);
        g.push_back(m);
      }
      for (long s : {1L, -1L}) {
        Matrix m = Matrix::zero(n, n);
        m.at(k, l) = gr(0, s);
        m.at(l, k) = gr(0, -s);
        g.push_back(m);
      }
    }
  return g;
}

std::vector<Matrix> gridPsd(int n) {
  std::vector<Matrix> g{Matrix::zero(n, n)};
  for (long s : {1L, 2L}) g.push_back(Matrix::scalarDiag(n, gr(s)));
  for (int k = 0; k < n; ++k)
    for (long s : {1L, 2L}) g.push_back(unit(n, n, k, k, gr(s)));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      for (GaussianRational w : {gr(1), gr(-1), gr(0, 1)}) {
        Matrix v = Matrix::zero(n, 1);  // (e_k + w e_l)(e_k + w e_l)*
        v.at(k, 0) = gr(1);
        v.at(l, 0) = w;
        g.push_back(v * v.adjoint());
      }
  return g;
}

using ParamPair = std::pair<Matrix, Matrix>;

std::vector<ParamPair> soloGrid(const std::vector<Matrix>& g) {
  std::vector<ParamPair> out;
  out.reserve(g.size());
  for (const Matrix& m : g) out.emplace_back(m, Matrix());
  return out;
}

std::vector<ParamPair> pairGrid(const std::vector<Matrix>& g1, const Matrix& zero2,
                                const Matrix& zero1, const std::vector<Matrix>& g2) {
  std::vector<ParamPair> out;
  out.reserve(g1.size() + g2.size());
  for (const Matrix& m : g1) out.emplace_back(m, zero2);
  for (const Matrix& m : g2) out.emplace_back(zero1, m);
  return out;
}

// Closed form plus explicit family members: value() maps parameters to a
// member of the Hermitian family the profile describes, grid/draw supply
// the parameters. dominantPairs hold definite-direction parameters at
// escalating scales: the inertia maxima are attained exactly when one term
// dominates, which bounded generic draws almost never produce.
struct Sampler {
  ExtremalProfile closed;
  std::vector<ParamPair> gridPairs;
  std::vector<ParamPair> dominantPairs;
  std::function<Matrix(const Matrix&, const Matrix&)> value;
  std::function<ParamPair(Rng&)> draw;
};

constexpr long kDominantScales[] = {4, 64, 1024, 16384, 262144, 4194304};

// One-parameter ladder: +t*D and, when both signs are legal, -t*D.
void pushSoloLadder(std::vector<ParamPair>& out, const Matrix& d, bool bothSigns) {
  for (long tv : kDominantScales) {
    out.emplace_back(gr(tv) * d, Matrix());
    if (bothSigns) out.emplace_back(gr(-tv) * d, Matrix());
  }
}

// Two-parameter ladder over all four sign combinations.
void pushPairLadder(std::vector<ParamPair>& out, const Matrix& d1, const Matrix& d2) {
  for (long tv : kDominantScales)
    for (long s1 : {1, -1})
      for (long s2 : {1, -1}) out.emplace_back(gr(s1 * tv) * d1, gr(s2 * tv) * d2);
}

Sampler makeSampler(ProfileFamily family, const std::vector<Matrix>& in) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (in.size() < lo || in.size() > hi)
      throw std::invalid_argument("envelope: wrong input count for family");
  };
  Sampler s;
  switch (family) {
    case ProfileFamily::CompletionHermitian: {
      need(2, 2);
      const Matrix a = in[0], b = in[1];
      s.closed = profileCompletionHermitian(
          CompletionSpec{a, b, std::nullopt, PsdSign::Minus, ConeConstraint::None});
      const int nb = b.cols();
      s.gridPairs = soloGrid(gridHermitian(nb));
      s.value = [a, b](const Matrix& x, const Matrix&) { return a - b * x * b.adjoint(); };
      pushSoloLadder(s.dominantPairs, Matrix::identity(nb), /*bothSigns=*/true);
      s.draw = [nb](Rng& rng) { return ParamPair(drawHermitian(rng, nb, kDrawBound), Matrix()); };
      break;
    }
    case ProfileFamily::CompletionPsdPlus:
    case ProfileFamily::CompletionPsdMinus: {
      need(2, 2);
      const bool plus = family == ProfileFamily::CompletionPsdPlus;
      const Matrix a = in[0], b = in[1];
      s.closed = profileCompletionPsd(CompletionSpec{
          a, b, std::nullopt, plus ? PsdSign::Plus : PsdSign::Minus, ConeConstraint::Psd});
      const int nb = b.cols();
      s.gridPairs = soloGrid(gridPsd(nb));
      pushSoloLadder(s.dominantPairs, Matrix::identity(nb), /*bothSigns=*/false);
      s.value = [a, b, plus](const Matrix& w, const Matrix&) {
        Matrix t = b * w * b.adjoint();
        return plus ? a + t : a - t;
      };
      s.draw = [nb](Rng& rng) { return ParamPair(drawPsd(rng, nb, kDrawBound), Matrix()); };
      break;
    }
    case ProfileFamily::CompletionTwo: {
      need(3, 3);
      const Matrix a = in[0], b = in[1], c = in[2];
      s.closed = profileCompletionTwo(CompletionSpec{a, b, c, PsdSign::Minus,
                                                     ConeConstraint::None});
      const int nb = b.cols(), nc = c.cols();
      s.gridPairs = pairGrid(gridHermitian(nb), Matrix::zero(nc, nc), Matrix::zero(nb, nb),
                             gridHermitian(nc));
      pushPairLadder(s.dominantPairs, Matrix::identity(nb), Matrix::identity(nc));
      s.value = [a, b, c](const Matrix& x, const Matrix& y) {
        return a - b * x * b.adjoint() - c * y * c.adjoint();
      };
      s.draw = [nb, nc](Rng& rng) {
        Matrix x = drawHermitian(rng, nb, kDrawBound);
        return ParamPair(std::move(x), drawHermitian(rng, nc, kDrawBound));
      };
      break;
    }
    case ProfileFamily::SkewPair: {
      need(2, 3);
      const Matrix a = in[0], b = in[1];
      const std::optional<Matrix> c =
          in.size() == 3 ? std::optional<Matrix>(in[2]) : std::nullopt;
      s.closed = profileSkewPair(a, b, c);
      const int m = a.rows(), nb = b.cols();
      if (!c.has_value()) {
        s.gridPairs = soloGrid(gridGeneral(nb, m));
        pushSoloLadder(s.dominantPairs, b.adjoint(), /*bothSigns=*/true);
        s.value = [a, b](const Matrix& x, const Matrix&) {
          Matrix t = b * x;
          return a - t - t.adjoint();
        };
        s.draw = [nb, m](Rng& rng) {
          return ParamPair(drawMatrix(rng, nb, m, kDrawBound), Matrix());
        };
      } else {
        const Matrix cm = *c;
        const int p = cm.rows();
        s.gridPairs = soloGrid(gridGeneral(nb, p));
        pushSoloLadder(s.dominantPairs, pinv(b).pinv * pinv(cm).pinv, /*bothSigns=*/true);
        s.value = [a, b, cm](const Matrix& x, const Matrix&) {
          Matrix t = b * x * cm;
          return a - t - t.adjoint();
        };
        s.draw = [nb, p](Rng& rng) {
          return ParamPair(drawMatrix(rng, nb, p, kDrawBound), Matrix());
        };
      }
      break;
    }
    case ProfileFamily::TwoCongruence: {
      need(4, 4);
      const CongruenceEqSpec s1 = makeCongruenceSpec(in[0], in[1]);
      const CongruenceEqSpec s2 = makeCongruenceSpec(in[2], in[3]);
      s.closed = profileTwoCongruence(s1, s2);
      const int n = s1.a.cols();
      const PinvBundle p1 = pinv(s1.a), p2 = pinv(s2.a);
      const Matrix base =
          p1.pinv * s1.b * p1.pinv.adjoint() - p2.pinv * s2.b * p2.pinv.adjoint();
      const Matrix f1 = p1.fProj, f2 = p2.fProj;
      s.gridPairs =
          pairGrid(gridGeneral(n, n), Matrix::zero(n, n), Matrix::zero(n, n), gridGeneral(n, n));
      pushPairLadder(s.dominantPairs, f1, f2);
      s.value = [base, f1, f2](const Matrix& u1, const Matrix& u2) {
        return base + f1 * u1 + u1.adjoint() * f1 - f2 * u2 - u2.adjoint() * f2;
      };
      s.draw = [n](Rng& rng) {
        Matrix u1 = drawMatrix(rng, n, n, kDrawBound);
        return ParamPair(std::move(u1), drawMatrix(rng, n, n, kDrawBound));
      };
      break;
    }
    case ProfileFamily::LinearVsP: {
      need(3, 3);
      const LinearEqSpec spec = makeLinearSpec(in[0], in[1]);
      s.closed = profileLinearVsP(spec, in[2]);
      const int n = spec.a.cols();
      const PinvBundle pa = pinv(spec.a);
      const Matrix x0 = pa.pinv * spec.b;
      const Matrix base = x0 + x0.adjoint() - x0 * pa.pinv * spec.a - in[2];
      const Matrix f = pa.fProj;
      s.gridPairs = soloGrid(gridHermitian(n));
      pushSoloLadder(s.dominantPairs, Matrix::identity(n), /*bothSigns=*/true);
      s.value = [base, f](const Matrix& u, const Matrix&) { return base + f * u * f; };
      s.draw = [n](Rng& rng) { return ParamPair(drawHermitian(rng, n, kDrawBound), Matrix()); };
      break;
    }
    case ProfileFamily::PsdLinearVsP: {
      need(3, 3);
      const LinearEqSpec spec = makeLinearSpec(in[0], in[1]);
      s.closed = profilePsdLinearVsP(spec, in[2]);
      const int n = spec.a.cols();
      const Matrix cross = spec.a * spec.b.adjoint();
      const Matrix base = spec.b.adjoint() * pinv(cross).pinv * spec.b - in[2];
      const Matrix f = pinv(spec.a).fProj;
      s.gridPairs = soloGrid(gridPsd(n));
      pushSoloLadder(s.dominantPairs, Matrix::identity(n), /*bothSigns=*/false);
      s.value = [base, f](const Matrix& w, const Matrix&) { return base + f * w * f; };
      s.draw = [n](Rng& rng) { return ParamPair(drawPsd(rng, n, kDrawBound), Matrix()); };
      break;
    }
    case ProfileFamily::TwoLinear: {
      need(4, 4);
      const LinearEqSpec s1 = makeLinearSpec(in[0], in[1]);
      const LinearEqSpec s2 = makeLinearSpec(in[2], in[3]);
      s.closed = profileTwoLinear(s1, s2);
      const int n = s1.a.cols();
      const PinvBundle p1 = pinv(s1.a), p2 = pinv(s2.a);
      const Matrix x1 = p1.pinv * s1.b, x2 = p2.pinv * s2.b;
      const Matrix base = (x1 + x1.adjoint() - x1 * p1.pinv * s1.a) -
                          (x2 + x2.adjoint() - x2 * p2.pinv * s2.a);
      const Matrix f1 = p1.fProj, f2 = p2.fProj;
      s.gridPairs =
          pairGrid(gridHermitian(n), Matrix::zero(n, n), Matrix::zero(n, n), gridHermitian(n));
      pushPairLadder(s.dominantPairs, Matrix::identity(n), Matrix::identity(n));
      s.value = [base, f1, f2](const Matrix& u1, const Matrix& u2) {
        return base + f1 * u1 * f1 - f2 * u2 * f2;
      };
      s.draw = [n](Rng& rng) {
        Matrix u1 = drawHermitian(rng, n, kDrawBound);
        return ParamPair(std::move(u1), drawHermitian(rng, n, kDrawBound));
      };
      break;
    }
    case ProfileFamily::LsVsLr: {
      need(2, 2);
      const CongruenceEqSpec spec = makeCongruenceSpec(in[0], in[1]);
      s.closed = profileLsVsLr(spec);
      const int m = spec.a.rows(), n = spec.a.cols();
      const PinvBundle pa = pinv(spec.a);
      const Matrix mBlock =
          blockGrid({{spec.b, spec.a}, {spec.a.adjoint(), Matrix::zero(n, n)}});
      const Matrix t = hcat(Matrix::zero(n, m), Matrix::identity(n));
      const PinvBundle pm = pinv(mBlock);
      const Matrix base =
          pa.pinv * spec.b * pa.pinv.adjoint() + t * pm.pinv * t.adjoint();
      const Matrix fA = pa.fProj;
      const Matrix t1 = t * pm.fProj;
      s.gridPairs = pairGrid(gridGeneral(n, n), Matrix::zero(m + n, n), Matrix::zero(n, n),
                             gridGeneral(m + n, n));
      pushPairLadder(s.dominantPairs, fA, t1.adjoint());
      s.value = [base, fA, t1](const Matrix& u, const Matrix& v) {
        return base + fA * u + u.adjoint() * fA - t1 * v - v.adjoint() * t1.adjoint();
      };
      s.draw = [m, n](Rng& rng) {
        Matrix u = drawMatrix(rng, n, n, kDrawBound);
        return ParamPair(std::move(u), drawMatrix(rng, m + n, n, kDrawBound));
      };
      break;
    }
  }
  return s;
}

struct Observed {
  int minRank = INT_MAX, maxRank = -1;
  int minIPlus = INT_MAX, maxIPlus = -1;
  int minIMinus = INT_MAX, maxIMinus = -1;

  void record(const Inertia& it) {
    const int r = it.rank();
    minRank = std::min(minRank, r);
    maxRank = std::max(maxRank, r);
    minIPlus = std::min(minIPlus, it.plus);
    maxIPlus = std::max(maxIPlus, it.plus);
    minIMinus = std::min(minIMinus, it.minus);
    maxIMinus = std::max(maxIMinus, it.minus);
  }
};

std::string sideStr(const std::variant<int, Inertia>& v) {
  if (std::holds_alternative<int>(v)) return std::to_string(std::get<int>(v));
  const Inertia& i = std::get<Inertia>(v);
  return "(" + std::to_string(i.plus) + "," + std::to_string(i.minus) + "," +
         std::to_string(i.zero) + ")";
}

}  // namespace

const char* profileFamilyStr(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::CompletionHermitian: return "completion";
    case ProfileFamily::CompletionPsdPlus: return "completion-psd-plus";
    case ProfileFamily::CompletionPsdMinus: return "completion-psd-minus";
    case ProfileFamily::CompletionTwo: return "completion-two";
    case ProfileFamily::SkewPair: return "skew";
    case ProfileFamily::TwoCongruence: return "two-congruence";
    case ProfileFamily::LinearVsP: return "linear-vs-p";
    case ProfileFamily::PsdLinearVsP: return "psd-vs-p";
    case ProfileFamily::TwoLinear: return "two-linear";
    case ProfileFamily::LsVsLr: return "ls-vs-lr";
  }
  return "?";
}

std::vector<ProfileFamily> allProfileFamilies() {
  return {ProfileFamily::CompletionHermitian, ProfileFamily::CompletionPsdPlus,
          ProfileFamily::CompletionPsdMinus, ProfileFamily::CompletionTwo,
          ProfileFamily::SkewPair,           ProfileFamily::TwoCongruence,
          ProfileFamily::LinearVsP,          ProfileFamily::PsdLinearVsP,
          ProfileFamily::TwoLinear,          ProfileFamily::LsVsLr};
}

const char* instanceKindStr(InstanceKind k) {
  switch (k) {
    case InstanceKind::LinearHermitian: return "linearHermitian";
    case InstanceKind::LinearPsd: return "linearPsd";
    case InstanceKind::Congruence: return "congruence";
    case InstanceKind::TwoLinear: return "twoLinear";
    case InstanceKind::TwoCongruence: return "twoCongruence";
    case InstanceKind::LsLr: return "lsLr";
  }
  return "?";
}

GeneratedInstance generateInstance(const InstanceRecipe& recipe) {
  if (recipe.m < 1 || recipe.n < 1 || recipe.bound < 1)
    throw std::invalid_argument("generateInstance: m, n, bound must be positive");
  Rng rng(recipe.seed);
  const int m = recipe.m, n = recipe.n, bound = recipe.bound;
  GeneratedInstance out;
  out.kind = recipe.kind;
  switch (recipe.kind) {
    case InstanceKind::LinearHermitian: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawHermitian(rng, n, bound);
      out.parts = {std::move(a), std::move(b)};
      break;
    }
    case InstanceKind::LinearPsd: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawPsd(rng, n, bound);
      out.parts = {std::move(a), std::move(b)};
      break;
    }
    case InstanceKind::Congruence: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawHermitian(rng, n, bound) * a.adjoint();
      out.parts = {std::move(a), std::move(b)};
      break;
    }
    case InstanceKind::TwoLinear: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawHermitian(rng, n, bound);
      Matrix c = drawMatrix(rng, m, n, bound);
      Matrix d = c * drawHermitian(rng, n, bound);
      out.parts = {std::move(a), std::move(b), std::move(c), std::move(d)};
      break;
    }
    case InstanceKind::TwoCongruence: {
      Matrix a1 = drawMatrix(rng, m, n, bound);
      Matrix b1 = a1 * drawHermitian(rng, n, bound) * a1.adjoint();
      Matrix a2 = drawMatrix(rng, m, n, bound);
      Matrix b2 = a2 * drawHermitian(rng, n, bound) * a2.adjoint();
      out.parts = {std::move(a1), std::move(b1), std::move(a2), std::move(b2)};
      break;
    }
    case InstanceKind::LsLr: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = rng.nextInt(0, 1) == 0 ? drawHermitian(rng, m, bound)
                                        : a * drawHermitian(rng, n, bound) * a.adjoint();
      out.parts = {std::move(a), std::move(b)};
      break;
    }
  }
  return out;
}

EnvelopeReport envelopeForInputs(ProfileFamily family, const std::vector<Matrix>& inputs,
                                 std::uint64_t seed, const EnvelopeOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("envelope: trials must be >= 1");
  Sampler s = makeSampler(family, inputs);
  EnvelopeReport rep;
  rep.family = family;
  rep.closedForm = s.closed;
  if (opt.defectDelta > 0) {
    // Negative control: a narrowed closed form must be caught by sampling.
    rep.closedForm.maxRank -= opt.defectDelta;
    rep.closedForm.minRank += opt.defectDelta;
    rep.closedForm.maxIPlus -= opt.defectDelta;
    rep.closedForm.minIPlus += opt.defectDelta;
    rep.closedForm.maxIMinus -= opt.defectDelta;
    rep.closedForm.minIMinus += opt.defectDelta;
  }
  Observed obs;
  // Deterministic draws first: the dominant ladder reaches the inertia
  // maxima, the structured grid pins the minima. The grid is capped at half
  // the budget so two-parameter grids (quadratic in the order) cannot starve
  // the generic draws that follow.
  int used = 0;
  for (const ParamPair& p : s.dominantPairs) {
    if (used >= opt.trials) break;
    obs.record(inertia(s.value(p.first, p.second)));
    ++used;
  }
  const int gridCap = opt.trials <= 2 ? opt.trials : opt.trials / 2;
  for (int g = 0; g < static_cast<int>(s.gridPairs.size()) && g < gridCap && used < opt.trials;
       ++g, ++used)
    obs.record(inertia(s.value(s.gridPairs[g].first, s.gridPairs[g].second)));
  for (int t = used; t < opt.trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    ParamPair p = s.draw(rng);
    // Cycle the magnitude so extremes where one term must dominate the other
    // are reachable with bounded-entry draws.
    const GaussianRational scale = gr(1L << (t % 4));
    if (p.first.rows() > 0) p.first = scale * p.first;
    if (p.second.rows() > 0) p.second = scale * p.second;
    obs.record(inertia(s.value(p.first, p.second)));
  }
  rep.observedMinRank = obs.minRank;
  rep.observedMaxRank = obs.maxRank;
  rep.observedMinIPlus = obs.minIPlus;
  rep.observedMaxIPlus = obs.maxIPlus;
  rep.observedMinIMinus = obs.minIMinus;
  rep.observedMaxIMinus = obs.maxIMinus;
  rep.trials = opt.trials;
  const ExtremalProfile& cf = rep.closedForm;
  rep.maxAttained = obs.maxRank == cf.maxRank && obs.maxIPlus == cf.maxIPlus &&
                    obs.maxIMinus == cf.maxIMinus;
  rep.minConsistent = cf.minRank <= obs.minRank && obs.maxRank <= cf.maxRank &&
                      cf.minIPlus <= obs.minIPlus && obs.maxIPlus <= cf.maxIPlus &&
                      cf.minIMinus <= obs.minIMinus && obs.maxIMinus <= cf.maxIMinus;
  return rep;
}

EnvelopeReport monteCarloEnvelope(ProfileFamily family, const InstanceRecipe& recipe,
                                  const EnvelopeOptions& opt) {
  if (recipe.m < 1 || recipe.n < 1 || recipe.bound < 1)
    throw std::invalid_argument("monteCarloEnvelope: m, n, bound must be positive");
  const std::uint64_t familyTag = static_cast<std::uint64_t>(family);
  Rng rng(Rng::derive(recipe.seed, 0x1000 + familyTag));
  const int m = recipe.m, n = recipe.n, bound = recipe.bound;
  std::vector<Matrix> inputs;
  switch (family) {
    case ProfileFamily::CompletionHermitian:
    case ProfileFamily::CompletionPsdPlus:
    case ProfileFamily::CompletionPsdMinus: {
      Matrix a = drawHermitian(rng, m, bound);
      inputs = {std::move(a), drawMatrix(rng, m, n, bound)};
      break;
    }
    case ProfileFamily::CompletionTwo: {
      Matrix a = drawHermitian(rng, m, bound);
      Matrix b = drawMatrix(rng, m, n, bound);
      const int k = static_cast<int>(rng.nextInt(1, n));
      inputs = {std::move(a), std::move(b), drawMatrix(rng, m, k, bound)};
      break;
    }
    case ProfileFamily::SkewPair: {
      Matrix a = drawHermitian(rng, m, bound);
      if (rng.nextInt(0, 1) == 0) {
        inputs = {std::move(a), drawMatrix(rng, m, n, bound)};
      } else {
        const int p = static_cast<int>(rng.nextInt(1, n));
        Matrix c = drawMatrix(rng, p, m, bound);
        Matrix b = c.adjoint() * drawMatrix(rng, p, n, bound);  // range(B) in range(C*)
        inputs = {std::move(a), std::move(b), std::move(c)};
      }
      break;
    }
    case ProfileFamily::TwoCongruence: {
      Matrix a1 = drawMatrix(rng, m, n, bound);
      Matrix b1 = a1 * drawHermitian(rng, n, bound) * a1.adjoint();
      Matrix a2 = drawMatrix(rng, m, n, bound);
      Matrix b2 = a2 * drawHermitian(rng, n, bound) * a2.adjoint();
      inputs = {std::move(a1), std::move(b1), std::move(a2), std::move(b2)};
      break;
    }
    case ProfileFamily::LinearVsP: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawHermitian(rng, n, bound);
      inputs = {std::move(a), std::move(b), drawHermitian(rng, n, bound)};
      break;
    }
    case ProfileFamily::PsdLinearVsP: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawPsd(rng, n, bound);
      inputs = {std::move(a), std::move(b), drawPsd(rng, n, bound)};
      break;
    }
    case ProfileFamily::TwoLinear: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = a * drawHermitian(rng, n, bound);
      Matrix c = drawMatrix(rng, m, n, bound);
      Matrix d = c * drawHermitian(rng, n, bound);
      inputs = {std::move(a), std::move(b), std::move(c), std::move(d)};
      break;
    }
    case ProfileFamily::LsVsLr: {
      Matrix a = drawMatrix(rng, m, n, bound);
      Matrix b = rng.nextInt(0, 1) == 0 ? drawHermitian(rng, m, bound)
                                        : a * drawHermitian(rng, n, bound) * a.adjoint();
      inputs = {std::move(a), std::move(b)};
      break;
    }
  }
  return envelopeForInputs(family, inputs, Rng::derive(recipe.seed, 0x2000 + familyTag), opt);
}

std::vector<IdentityReport> identitySuite(std::uint64_t seed, int trials, int maxDim) {
  if (trials < 1 || maxDim < 1)
    throw std::invalid_argument("identitySuite: trials and maxDim must be >= 1");
  std::vector<IdentityReport> out;
  auto append = [&out](std::vector<IdentityReport> reports) {
    for (auto& r : reports) out.push_back(std::move(r));
  };
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    const int m = static_cast<int>(rng.nextInt(1, maxDim));
    const int n = static_cast<int>(rng.nextInt(1, maxDim));
    const int k = static_cast<int>(rng.nextInt(1, maxDim));
    const int l = static_cast<int>(rng.nextInt(1, maxDim));
    append(rankExpansionReport(drawMatrix(rng, m, n, kDrawBound), drawMatrix(rng, m, k, kDrawBound),
                               drawMatrix(rng, l, n, kDrawBound), Matrix::zero(1, 1)));
    append(inertiaExpansionReport(drawHermitian(rng, m, kDrawBound),
                                  drawMatrix(rng, m, n, kDrawBound),
                                  drawHermitian(rng, n, kDrawBound)));
    // Forced-hypothesis rounds so the conditional identities fire every trial:
    // a psd corner block, then a corner with range(B) inside range(A).
    append(inertiaExpansionReport(drawPsd(rng, m, kDrawBound), drawMatrix(rng, m, n, kDrawBound),
                                  drawHermitian(rng, n, kDrawBound)));
    {
      Matrix a = drawHermitian(rng, m, kDrawBound);
      Matrix b = a * drawMatrix(rng, m, n, kDrawBound);
      append(inertiaExpansionReport(a, b, drawHermitian(rng, n, kDrawBound)));
    }
    append(projectorExpansionReport(
        drawHermitian(rng, m, kDrawBound), drawMatrix(rng, m, k, kDrawBound),
        drawMatrix(rng, l, m, kDrawBound), drawHermitian(rng, k, kDrawBound),
        drawMatrix(rng, l, k, kDrawBound), drawMatrix(rng, m, k, kDrawBound)));
    append(inertiaSplitReport(drawHermitian(rng, m, kDrawBound), drawHermitian(rng, n, kDrawBound),
                              drawMatrix(rng, m, k, kDrawBound)));
  }
  return out;
}

std::vector<SuiteCount> aggregateIdentityCounts(const std::vector<IdentityReport>& reports) {
  std::vector<SuiteCount> out;
  std::map<std::string, std::size_t> index;
  for (const IdentityReport& r : reports) {
    auto it = index.find(r.name);
    if (it == index.end()) {
      index.emplace(r.name, out.size());
      out.push_back(SuiteCount{r.name, 0, 0, {}});
      it = index.find(r.name);
    }
    SuiteCount& c = out[it->second];
    ++c.trials;
    if (!r.holds) {
      ++c.failures;
      if (c.firstFailure.empty())
        c.firstFailure = "lhs " + sideStr(r.lhs) + " vs rhs " + sideStr(r.rhs);
    }
  }
  return out;
}

std::vector<SuiteCount> specialCaseEqualitySuite(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("specialCaseEqualitySuite: trials must be >= 1");
  std::vector<SuiteCount> out;
  std::uint64_t caseTag = 0;
  auto runCase = [&](const char* name, auto&& body) {
    SuiteCount c{name, 0, 0, {}};
    const std::uint64_t caseSeed = Rng::derive(seed, 0xCA5E + caseTag++);
    for (int t = 0; t < trials; ++t) {
      Rng rng(Rng::derive(caseSeed, static_cast<std::uint64_t>(t)));
      ++c.trials;
      std::string why;
      if (!body(rng, why)) {
        ++c.failures;
        if (c.firstFailure.empty())
          c.firstFailure = "trial " + std::to_string(t) + (why.empty() ? "" : ": " + why);
      }
    }
    out.push_back(std::move(c));
  };
  const int bound = kDrawBound;
  const OrderingQuery existsEqual{Relation::Equal, Mode::Exists};

  runCase("member reference point drops the minimum to zero", [&](Rng& rng, std::string& why) {
    const int m = static_cast<int>(rng.nextInt(1, 4));
    const int n = static_cast<int>(rng.nextInt(1, 4));
    Matrix a = drawMatrix(rng, m, n, bound);
    LinearEqSpec spec = makeLinearSpec(a, a * drawHermitian(rng, n, bound));
    Matrix p = hermitianSolution(spec, drawHermitian(rng, n, bound));
    ExtremalProfile pr = profileLinearVsP(spec, p);
    if (pr.minRank != 0 || pr.minIPlus != 0 || pr.minIMinus != 0 ||
        !decideLinearVsP(spec, p, existsEqual).holds) {
      why = "hermitian reference point";
      return false;
    }
    LinearEqSpec specPsd = makeLinearSpec(a, a * drawPsd(rng, n, bound));
    Matrix q = psdSolution(specPsd, drawMatrix(rng, n, n, bound));
    ExtremalProfile prPsd = profilePsdLinearVsP(specPsd, q);
    if (prPsd.minRank != 0 || prPsd.minIPlus != 0 || prPsd.minIMinus != 0 ||
        !decidePsdLinearVsP(specPsd, q, existsEqual).holds) {
      why = "psd reference point";
      return false;
    }
    return true;
  });

  runCase("full-rank transform keeps the congruence set", [&](Rng& rng, std::string& why) {
    const int m = static_cast<int>(rng.nextInt(1, 4));
    const int n = static_cast<int>(rng.nextInt(1, 4));
    Matrix a = drawMatrix(rng, m, n, bound);
    CongruenceEqSpec spec = makeCongruenceSpec(a, a * drawHermitian(rng, n, bound) * a.adjoint());
    Matrix tm = drawNonsingular(rng, m, bound);
    if (!decideTransformedSetEquality(spec, tm).holds) {
      why = "set equality rejected";
      return false;
    }
    CongruenceEqSpec tspec = makeCongruenceSpec(tm * spec.a, tm * spec.b * tm.adjoint());
    for (int j = 0; j < 5; ++j) {
      Matrix y = congruenceSolution(tspec, drawMatrix(rng, n, n, bound));
      if (spec.a * y * spec.a.adjoint() != spec.b) {
        why = "transformed member misses the original equation";
        return false;
      }
    }
    return true;
  });

  runCase("rank-dropping transform enlarges the congruence set", [&](Rng& rng, std::string& why) {
    const int m = static_cast<int>(rng.nextInt(1, 4));
    const int n = static_cast<int>(rng.nextInt(1, 4));
    Matrix a = drawMatrix(rng, m, n, bound);
    while (a.isZero()) a = drawMatrix(rng, m, n, bound);
    CongruenceEqSpec spec = makeCongruenceSpec(a, a * drawHermitian(rng, n, bound) * a.adjoint());
    Matrix e = pinv(a).eProj;  // E_A A = 0, so the transformed equation is 0 = 0
    if (decideTransformedSetEquality(spec, e).holds) {
      why = "set equality accepted for a rank-killing transform";
      return false;
    }
    int j = 0;
    while (a.sub(0, j, m, 1).isZero()) ++j;
    Matrix v = unit(n, 1, j, 0, gr(1));
    Matrix y = congruenceSolution(spec, Matrix::zero(n, n)) + v * v.adjoint();
    Matrix ea = e * a;
    if (ea * y * ea.adjoint() != e * spec.b * e.adjoint()) {
      why = "witness left the transformed set";
      return false;
    }
    if (a * y * a.adjoint() == spec.b) {
      why = "witness unexpectedly solves the original equation";
      return false;
    }
    return true;
  });

  runCase("identical linear pairs intersect with a shared witness", [&](Rng& rng,
                                                                        std::string& why) {
    const int m = static_cast<int>(rng.nextInt(1, 4));
    const int n = static_cast<int>(rng.nextInt(1, 4));
    Matrix a = drawMatrix(rng, m, n, bound);
    LinearEqSpec spec = makeLinearSpec(a, a * drawHermitian(rng, n, bound));
    Verdict v = decideTwoLinear(spec, spec, existsEqual);
    if (!v.holds || !v.witness.has_value()) {
      why = "no shared witness";
      return false;
    }
    if (spec.a * *v.witness != spec.b) {
      why = "witness violates the equation";
      return false;
    }
    return true;
  });

  runCase("psd right-hand side pulls least-squares onto the solution set",
          [&](Rng& rng, std::string& why) {
            const int m = static_cast<int>(rng.nextInt(1, 4));
            const int n = static_cast<int>(rng.nextInt(1, 4));
            Matrix a = drawMatrix(rng, m, n, bound);
            Matrix w = drawMatrix(rng, m, m, bound);
            CongruenceEqSpec spec = makeCongruenceSpec(a, w * w.adjoint());
            if (!decideLsVsLr(spec, OrderingQuery{Relation::Succeq, Mode::Exists}).holds) {
              why = "exists-succeq rejected for psd B";
              return false;
            }
            CongruenceEqSpec aligned = makeCongruenceSpec(a, a * a.adjoint());
            if (!decideLsVsLr(aligned, existsEqual).holds ||
                profileLsVsLr(aligned).minRank != 0) {
              why = "range-aligned psd B misses the least-rank set";
              return false;
            }
            return true;
          });

  runCase("matching row spaces let split averages solve the whole",
          [&](Rng& rng, std::string& why) {
            const int m1 = static_cast<int>(rng.nextInt(1, 3));
            const int n = static_cast<int>(rng.nextInt(1, 4));
            Matrix a1 = drawMatrix(rng, m1, n, bound);
            Matrix s = rng.nextInt(0, 1) == 0 ? Matrix::identity(m1)
                                              : drawNonsingular(rng, m1, bound);
            Matrix a = vcat(a1, s * a1);
            CongruenceEqSpec spec =
                makeCongruenceSpec(a, a * drawHermitian(rng, n, bound) * a.adjoint());
            if (!decideAveragePartition(spec, m1).holds) {
              why = "partition equality rejected";
              return false;
            }
            CongruenceEqSpec top = makeCongruenceSpec(a1, spec.b.sub(0, 0, m1, m1));
            CongruenceEqSpec bot = makeCongruenceSpec(s * a1, spec.b.sub(m1, m1, m1, m1));
            const GaussianRational half{Rational(1, 2)};
            for (int j = 0; j < 3; ++j) {
              Matrix x1 = congruenceSolution(top, drawMatrix(rng, n, n, bound));
              Matrix x2 = congruenceSolution(bot, drawMatrix(rng, n, n, bound));
              Matrix avg = half * (x1 + x2);
              if (spec.a * avg * spec.a.adjoint() != spec.b) {
                why = "average misses the full equation";
                return false;
              }
            }
            return true;
          });

  runCase("normal equation keeps the congruence set", [&](Rng& rng, std::string& why) {
    const int m = static_cast<int>(rng.nextInt(1, 4));
    const int n = static_cast<int>(rng.nextInt(1, 4));
    Matrix a = drawMatrix(rng, m, n, bound);
    CongruenceEqSpec spec = makeCongruenceSpec(a, a * drawHermitian(rng, n, bound) * a.adjoint());
    if (!decideTransformedSetEquality(spec, a.adjoint()).holds) {
      why = "normal-equation equality rejected";
      return false;
    }
    for (int j = 0; j < 5; ++j) {
      Matrix x = leastSquaresSolution(spec, drawMatrix(rng, n, n, bound)).x;
      if (spec.a * x * spec.a.adjoint() != spec.b) {
        why = "normal-equation member misses the original equation";
        return false;
      }
    }
    return true;
  });

  return out;
}

}  // namespace hermeq

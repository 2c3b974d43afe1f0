// hermeq: exact solvability, parameterization and rank/inertia analysis of
// Hermitian and Hermitian-definite solution sets of AX = B and AXA* = B.
//
// Exit codes: 0 holds/success, 1 unsolvable precondition, 2 input error,
// 3 statement decidedly false, 4 unsupported query, 5 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hermeq/blocks.hpp"
#include "hermeq/error.hpp"
#include "hermeq/io.hpp"
#include "hermeq/oracle.hpp"
#include "hermeq/profiles.hpp"
#include "hermeq/rng.hpp"
#include "hermeq/solutions.hpp"
#include "hermeq/verdicts.hpp"

using nlohmann::json;
using namespace hermeq;

namespace {

constexpr const char* kVersion = "hermeq 1.0.0";

struct InputFile {
  std::string path;
  std::string digest;
  Matrix matrix;
};

struct Session {
  std::string output = "text";
  std::string command;
  std::uint64_t seed = 0;
  std::vector<InputFile> inputs;

  Matrix load(const std::string& path) {
    const std::string bytes = readFileBytes(path);
    InputFile f;
    f.path = path;
    f.digest = fnv1a64(bytes);
    try {
      f.matrix = parseMatrixJson(bytes);
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) fail(Errc::ParseError, path + ": " + e.what());
      throw;
    }
    inputs.push_back(f);
    return f.matrix;
  }

  void emit(const json& result, const std::string& text) const {
    if (output == "json") {
      json report;
      report["version"] = kVersion;
      report["command"] = command;
      report["inputs"] = json::array();
      for (const InputFile& f : inputs)
        report["inputs"].push_back({{"path", f.path}, {"digest", f.digest}});
      report["result"] = result;
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

json matrixJson(const Matrix& m) { return json::parse(serializeMatrix(m)); }

json profileJson(const ExtremalProfile& p) {
  return json{{"maxRank", p.maxRank},   {"minRank", p.minRank},   {"maxIPlus", p.maxIPlus},
              {"minIPlus", p.minIPlus}, {"maxIMinus", p.maxIMinus}, {"minIMinus", p.minIMinus},
              {"order", p.ambientOrder}};
}

std::string profileText(const ExtremalProfile& p) {
  std::ostringstream out;
  out << "rank range: [" << p.minRank << ", " << p.maxRank << "]\n"
      << "i+ range:   [" << p.minIPlus << ", " << p.maxIPlus << "]\n"
      << "i- range:   [" << p.minIMinus << ", " << p.maxIMinus << "]\n"
      << "order:      " << p.ambientOrder << "\n";
  return out.str();
}

json certificateJson(const SolvabilityCertificate& c) {
  json conds = json::array();
  for (const auto& [label, ok] : c.conditions)
    conds.push_back({{"condition", label}, {"holds", ok}});
  return json{{"solvable", c.solvable}, {"conditions", conds}};
}

std::string certificateText(const SolvabilityCertificate& c) {
  std::ostringstream out;
  out << "solvable: " << (c.solvable ? "yes" : "no") << "\n";
  for (const auto& [label, ok] : c.conditions)
    out << "  [" << (ok ? "ok" : "FAILED") << "] " << label << "\n";
  return out.str();
}

json verdictJson(const Verdict& v) {
  json ev = json::array();
  for (const auto& [name, value] : v.evidence) ev.push_back({{"name", name}, {"value", value}});
  json out{{"relation", relationStr(v.query.relation)},
           {"mode", modeStr(v.query.mode)},
           {"holds", v.holds},
           {"route", v.route},
           {"evidence", ev}};
  if (v.witness.has_value()) out["witness"] = matrixJson(*v.witness);
  return out;
}

std::string verdictText(const Verdict& v) {
  std::ostringstream out;
  out << "relation: " << relationStr(v.query.relation) << ", mode: " << modeStr(v.query.mode)
      << "\nholds: " << (v.holds ? "yes" : "no") << "\nroute: " << v.route << "\n";
  if (!v.evidence.empty()) {
    out << "evidence:\n";
    for (const auto& [name, value] : v.evidence) out << "  " << name << " = " << value << "\n";
  }
  if (v.witness.has_value()) out << "witness = " << v.witness->str() << "\n";
  return out.str();
}

void needFiles(const std::string& cmd, const std::vector<Matrix>& files, std::size_t lo,
               std::size_t hi) {
  if (files.size() < lo || files.size() > hi)
    fail(Errc::ParseError, cmd + ": expected " + std::to_string(lo) +
                               (hi == lo ? "" : "-" + std::to_string(hi)) + " matrix files, got " +
                               std::to_string(files.size()));
}

// ---------------------------------------------------------------------------

int runSolve(Session& ses, const std::string& kind, const std::vector<std::string>& paths,
             const std::string& paramPath) {
  if (paths.size() != 2) fail(Errc::ParseError, "solve: expected exactly A.json B.json");
  Matrix a = ses.load(paths[0]);
  Matrix b = ses.load(paths[1]);
  json result{{"kind", kind}};
  std::ostringstream text;

  if (kind == "congruence") {
    CongruenceEqSpec spec = makeCongruenceSpec(a, b);
    SolvabilityCertificate cert = checkCongruence(spec);
    result["certificate"] = certificateJson(cert);
    text << "equation: AXA* = B\n" << certificateText(cert);
    if (!cert.solvable) {
      ses.emit(result, text.str());
      return 1;
    }
    const int n = spec.a.cols();
    Matrix u = paramPath.empty() ? sampleMatrix(ses.seed, n, n, 2) : ses.load(paramPath);
    Matrix x = congruenceSolution(spec, u);
    if (spec.a * x * spec.a.adjoint() != spec.b || !x.isHermitian())
      throw std::logic_error("constructed solution failed in-process verification");
    result["solution"] = matrixJson(x);
    result["verified"] = json{{"equationHolds", true}, {"hermitian", true}};
    text << "solution X = " << x.str() << "\n"
         << "verified: AXA* = B holds exactly and X is Hermitian\n";
    ses.emit(result, text.str());
    return 0;
  }

  const bool psd = kind == "linear-psd";
  LinearEqSpec spec = makeLinearSpec(a, b);
  SolvabilityCertificate cert = psd ? checkLinearPsd(spec) : checkLinearHermitian(spec);
  result["certificate"] = certificateJson(cert);
  text << "equation: AX = B (" << (psd ? "psd" : "Hermitian") << " unknown)\n"
       << certificateText(cert);
  if (!cert.solvable) {
    ses.emit(result, text.str());
    return 1;
  }
  const int n = spec.a.cols();
  Matrix param = paramPath.empty()
                     ? (psd ? sampleMatrix(ses.seed, n, n, 2) : sampleHermitian(ses.seed, n, 2))
                     : ses.load(paramPath);
  Matrix x = psd ? psdSolution(spec, param) : hermitianSolution(spec, param);
  const bool psdOk = !psd || isPsd(x);
  if (spec.a * x != spec.b || !x.isHermitian() || !psdOk)
    throw std::logic_error("constructed solution failed in-process verification");
  result["solution"] = matrixJson(x);
  result["verified"] = json{{"equationHolds", true}, {"hermitian", true}, {"psd", psd}};
  text << "solution X = " << x.str() << "\n"
       << "verified: AX = B holds exactly, X Hermitian" << (psd ? " and psd" : "") << "\n";
  ses.emit(result, text.str());
  return 0;
}

// ---------------------------------------------------------------------------

int runProfile(Session& ses, const std::string& kind, const std::vector<std::string>& paths,
               const std::string& sign) {
  std::vector<Matrix> f;
  f.reserve(paths.size());
  for (const std::string& p : paths) f.push_back(ses.load(p));

  ExtremalProfile pr;
  json evidence = json::object();
  json extra = json::object();

  if (kind == "completion") {
    needFiles(kind, f, 2, 3);
    if (f.size() == 2) {
      pr = profileCompletionHermitian(
          CompletionSpec{f[0], f[1], std::nullopt, PsdSign::Minus, ConeConstraint::None});
      const Inertia im = inertia(assembleNamedBlock(BlockName::M1Bordered, {f[0], f[1]}).matrix);
      evidence["r[A,B]"] = rank(hcat(f[0], f[1]));
      evidence["iplus(M1)"] = im.plus;
      evidence["iminus(M1)"] = im.minus;
    } else {
      pr = profileCompletionTwo(
          CompletionSpec{f[0], f[1], f[2], PsdSign::Minus, ConeConstraint::None});
      const int nb = f[1].cols(), nc = f[2].cols();
      const Matrix k = blockGrid(
          {{f[0], f[1], f[2]},
           {f[1].adjoint(), Matrix::zero(nb, nb), Matrix::zero(nb, nc)},
           {f[2].adjoint(), Matrix::zero(nc, nb), Matrix::zero(nc, nc)}});
      const Inertia ik = inertia(k);
      evidence["r[A,B,C]"] = rank(hcat(hcat(f[0], f[1]), f[2]));
      evidence["iplus(K)"] = ik.plus;
      evidence["iminus(K)"] = ik.minus;
    }
  } else if (kind == "completion-psd") {
    needFiles(kind, f, 2, 2);
    pr = profileCompletionPsd(CompletionSpec{
        f[0], f[1], std::nullopt, sign == "plus" ? PsdSign::Plus : PsdSign::Minus,
        ConeConstraint::Psd});
    const Inertia im = inertia(assembleNamedBlock(BlockName::M1Bordered, {f[0], f[1]}).matrix);
    const Inertia ia = inertia(f[0]);
    evidence["r[A,B]"] = rank(hcat(f[0], f[1]));
    evidence["iplus(M1)"] = im.plus;
    evidence["iminus(M1)"] = im.minus;
    evidence["iplus(A)"] = ia.plus;
    evidence["iminus(A)"] = ia.minus;
    extra["sign"] = sign;
  } else if (kind == "skew") {
    needFiles(kind, f, 2, 3);
    const std::optional<Matrix> c =
        f.size() == 3 ? std::optional<Matrix>(f[2]) : std::nullopt;
    pr = profileSkewPair(f[0], f[1], c);
    const Inertia im = inertia(assembleNamedBlock(BlockName::M1Bordered, {f[0], f[1]}).matrix);
    evidence["iplus(M1)"] = im.plus;
    evidence["iminus(M1)"] = im.minus;
    if (c.has_value()) {
      evidence["r[A,C*]"] = rank(hcat(f[0], c->adjoint()));
      evidence["r[A B; C 0]"] = rank(
          blockGrid({{f[0], f[1]}, {*c, Matrix::zero(c->rows(), f[1].cols())}}));
    } else {
      evidence["r(B)"] = rank(f[1]);
    }
  } else if (kind == "two-congruence") {
    needFiles(kind, f, 4, 4);
    CongruenceEqSpec s1 = makeCongruenceSpec(f[0], f[1]), s2 = makeCongruenceSpec(f[2], f[3]);
    pr = profileTwoCongruence(s1, s2);
    const Inertia im =
        inertia(assembleNamedBlock(BlockName::MTwoCongruence, {f[0], f[1], f[2], f[3]}).matrix);
    evidence["iplus(M)"] = im.plus;
    evidence["iminus(M)"] = im.minus;
    evidence["r(A1)"] = rank(f[0]);
    evidence["r(A2)"] = rank(f[2]);
    evidence["r[A1*, A2*]"] = rank(hcat(f[0].adjoint(), f[2].adjoint()));
  } else if (kind == "linear-vs-p") {
    needFiles(kind, f, 3, 3);
    LinearEqSpec spec = makeLinearSpec(f[0], f[1]);
    pr = profileLinearVsP(spec, f[2]);
    const Matrix g = f[1] * f[0].adjoint() - f[0] * f[2] * f[0].adjoint();
    const Inertia ig = inertia(g);
    evidence["r(A)"] = rank(f[0]);
    evidence["r(B-AP)"] = rank(f[1] - f[0] * f[2]);
    evidence["iplus(G)"] = ig.plus;
    evidence["iminus(G)"] = ig.minus;
  } else if (kind == "psd-vs-p") {
    needFiles(kind, f, 3, 3);
    LinearEqSpec spec = makeLinearSpec(f[0], f[1]);
    pr = profilePsdLinearVsP(spec, f[2]);
    const Inertia im =
        inertia(assembleNamedBlock(BlockName::MPsdVsP, {f[0], f[1], f[2]}).matrix);
    const Matrix g = f[1] * f[0].adjoint() - f[0] * f[2] * f[0].adjoint();
    evidence["iplus(M)"] = im.plus;
    evidence["iminus(M)"] = im.minus;
    evidence["r(B)"] = rank(f[1]);
    evidence["r(B-AP)"] = rank(f[1] - f[0] * f[2]);
    evidence["iplus(G)"] = inertia(g).plus;
  } else if (kind == "two-linear") {
    needFiles(kind, f, 4, 4);
    LinearEqSpec s1 = makeLinearSpec(f[0], f[1]), s2 = makeLinearSpec(f[2], f[3]);
    pr = profileTwoLinear(s1, s2);
    const Inertia im =
        inertia(assembleNamedBlock(BlockName::MTwoLinear, {f[0], f[1], f[2], f[3]}).matrix);
    evidence["r(N)"] =
        rank(assembleNamedBlock(BlockName::NTwoLinear, {f[0], f[1], f[2], f[3]}).matrix);
    evidence["iplus(M)"] = im.plus;
    evidence["iminus(M)"] = im.minus;
    evidence["r(A)"] = rank(f[0]);
    evidence["r(C)"] = rank(f[2]);
  } else if (kind == "ls-vs-lr") {
    needFiles(kind, f, 2, 2);
    CongruenceEqSpec spec = makeCongruenceSpec(f[0], f[1]);
    pr = profileLsVsLr(spec);
    const Inertia im = inertia(assembleNamedBlock(BlockName::MLsLr, {f[0], f[1]}).matrix);
    const Inertia in_ = inertia(assembleNamedBlock(BlockName::NLsLr, {f[0], f[1]}).matrix);
    evidence["iplus(M)"] = im.plus;
    evidence["iminus(M)"] = im.minus;
    evidence["iplus(N)"] = in_.plus;
    evidence["iminus(N)"] = in_.minus;
    evidence["r(A)"] = rank(f[0]);
    evidence["r[A,B]"] = rank(hcat(f[0], f[1]));
    if (isPsd(f[1])) {
      // B psd collapses the general formulas to a shortcut set; show both.
      const int n = f[0].cols(), ra = rank(f[0]);
      const int raba = rank(hcat(f[0], f[1] * f[0]));
      const ExtremalProfile simple =
          makeProfile(std::min(n, 2 * n + raba - 3 * ra), raba - ra, raba + n - 2 * ra,
                      raba - ra, n - ra, 0, n);
      extra["branches"] = json{{"general", profileJson(pr)},
                               {"simplified", profileJson(simple)},
                               {"equal", simple == pr}};
    }
  } else {
    fail(Errc::ParseError, "unknown profile kind: " + kind);
  }

  json result{{"kind", kind}, {"profile", profileJson(pr)}, {"evidence", evidence}};
  for (auto& [k, v] : extra.items()) result[k] = v;

  std::ostringstream text;
  text << "family: " << kind << "\n" << profileText(pr) << "evidence:\n";
  for (auto& [k, v] : evidence.items()) text << "  " << k << " = " << v.get<long>() << "\n";
  if (extra.contains("branches"))
    text << "psd shortcut branch equals general branch: "
         << (extra["branches"]["equal"].get<bool>() ? "yes" : "NO") << "\n";
  ses.emit(result, text.str());
  return 0;
}

// ---------------------------------------------------------------------------

Relation parseRelation(const std::string& s) {
  if (s == "succ") return Relation::Succ;
  if (s == "succeq") return Relation::Succeq;
  if (s == "prec") return Relation::Prec;
  if (s == "preceq") return Relation::Preceq;
  if (s == "nonsingular") return Relation::Nonsingular;
  if (s == "equal") return Relation::Equal;
  fail(Errc::ParseError, "unknown relation: " + s);
}

int runOrder(Session& ses, const std::string& kind, const std::vector<std::string>& paths,
             const std::string& relation, const std::string& mode, int split) {
  std::vector<Matrix> f;
  f.reserve(paths.size());
  for (const std::string& p : paths) f.push_back(ses.load(p));
  OrderingQuery q{parseRelation(relation), mode == "forall" ? Mode::Forall : Mode::Exists};

  Verdict v;
  if (kind == "linear-vs-p") {
    needFiles(kind, f, 3, 3);
    v = decideLinearVsP(makeLinearSpec(f[0], f[1]), f[2], q);
  } else if (kind == "psd-vs-p") {
    needFiles(kind, f, 3, 3);
    v = decidePsdLinearVsP(makeLinearSpec(f[0], f[1]), f[2], q);
  } else if (kind == "two-linear") {
    needFiles(kind, f, 4, 4);
    v = decideTwoLinear(makeLinearSpec(f[0], f[1]), makeLinearSpec(f[2], f[3]), q);
  } else if (kind == "two-congruence") {
    needFiles(kind, f, 4, 4);
    v = decideTwoCongruence(makeCongruenceSpec(f[0], f[1]), makeCongruenceSpec(f[2], f[3]), q);
  } else if (kind == "transformed") {
    needFiles(kind, f, 3, 3);
    CongruenceEqSpec spec = makeCongruenceSpec(f[0], f[1]);
    v = q.relation == Relation::Equal && q.mode == Mode::Exists
            ? decideTransformedSetEquality(spec, f[2])
            : decideTransformedOrdering(spec, f[2], q);
  } else if (kind == "average" || kind == "average-partition" || kind == "average-sum") {
    if (q.relation != Relation::Equal)
      fail(Errc::UnsupportedQuery, "average comparisons support --relation equal only");
    if (q.mode == Mode::Forall)
      fail(Errc::UnsupportedQuery, "average comparisons are not modal; use --mode exists");
    if (kind == "average") {
      needFiles(kind, f, 4, 4);
      v = decideAverageEquality(makeCongruenceSpec(f[0], f[1]), f[2], f[3]);
    } else if (kind == "average-partition") {
      needFiles(kind, f, 2, 2);
      if (split < 1) fail(Errc::ParseError, "average-partition requires --split >= 1");
      v = decideAveragePartition(makeCongruenceSpec(f[0], f[1]), split);
    } else {
      needFiles(kind, f, 3, 3);
      v = decideAverageSum(makeCongruenceSpec(f[0], f[1]), f[2]);
    }
  } else if (kind == "ls-vs-lr") {
    needFiles(kind, f, 2, 2);
    v = decideLsVsLr(makeCongruenceSpec(f[0], f[1]), q);
  } else {
    fail(Errc::ParseError, "unknown order kind: " + kind);
  }

  json result{{"kind", kind}, {"verdict", verdictJson(v)}};
  std::ostringstream text;
  text << "statement kind: " << kind << "\n" << verdictText(v);
  ses.emit(result, text.str());
  return v.holds ? 0 : 3;
}

// ---------------------------------------------------------------------------

int runVerify(Session& ses, const std::string& suite, int trials, int maxDim, int bound,
              int instances, bool injectDefect, const std::string& cxOut) {
  if (trials < 1) fail(Errc::ParseError, "verify: --trials must be >= 1");
  if (maxDim < 1) fail(Errc::ParseError, "verify: --max-dim must be >= 1");
  if (bound < 1) fail(Errc::ParseError, "verify: --bound must be >= 1");
  if (instances < 1) fail(Errc::ParseError, "verify: --instances must be >= 1");

  long violations = 0;
  json suites = json::object();
  json counterexample;
  bool haveCx = false;
  std::ostringstream text;
  text << "suite: " << suite << " (trials " << trials << ", max dim " << maxDim << ", seed "
       << ses.seed << ")\n";

  if (suite == "identities" || suite == "all") {
    const std::vector<SuiteCount> counts =
        aggregateIdentityCounts(identitySuite(ses.seed, trials, maxDim));
    json arr = json::array();
    long fails = 0;
    for (const SuiteCount& c : counts) {
      arr.push_back({{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}});
      fails += c.failures;
      if (c.failures > 0 && !haveCx) {
        haveCx = true;
        counterexample = json{{"suite", "identities"}, {"name", c.name},
                              {"detail", c.firstFailure}, {"seed", ses.seed},
                              {"trials", trials},        {"maxDim", maxDim}};
      }
    }
    violations += fails;
    suites["identities"] = arr;
    text << "identities: " << counts.size() << " names, " << fails << " failures\n";
  }

  if (suite == "envelopes" || suite == "all") {
    EnvelopeOptions opt{trials, injectDefect ? 1 : 0};
    json arr = json::array();
    long contFails = 0, attained = 0, total = 0;
    for (ProfileFamily fam : allProfileFamilies()) {
      long famFails = 0, famAttained = 0;
      for (int i = 0; i < instances; ++i) {
        const std::uint64_t s =
            Rng::derive(ses.seed, 7000 + 100 * static_cast<std::uint64_t>(fam) + i);
        Rng dims(s);
        InstanceRecipe recipe{s, static_cast<int>(dims.nextInt(1, maxDim)),
                              static_cast<int>(dims.nextInt(1, maxDim)),
                              InstanceKind::LinearHermitian, bound};
        EnvelopeReport rep = monteCarloEnvelope(fam, recipe, opt);
        ++total;
        if (rep.maxAttained) ++famAttained;
        if (!rep.minConsistent) {
          ++famFails;
          ++violations;
          if (!haveCx) {
            haveCx = true;
            counterexample =
                json{{"suite", "envelopes"},
                     {"family", profileFamilyStr(fam)},
                     {"recipe", json{{"seed", recipe.seed},
                                     {"m", recipe.m},
                                     {"n", recipe.n},
                                     {"bound", recipe.bound}}},
                     {"trials", rep.trials},
                     {"closedForm", profileJson(rep.closedForm)},
                     {"observed", json{{"minRank", rep.observedMinRank},
                                       {"maxRank", rep.observedMaxRank},
                                       {"minIPlus", rep.observedMinIPlus},
                                       {"maxIPlus", rep.observedMaxIPlus},
                                       {"minIMinus", rep.observedMinIMinus},
                                       {"maxIMinus", rep.observedMaxIMinus}}}};
          }
        }
      }
      contFails += famFails;
      attained += famAttained;
      arr.push_back({{"family", profileFamilyStr(fam)},
                     {"instances", instances},
                     {"containmentFailures", famFails},
                     {"maxAttained", famAttained}});
    }
    suites["envelopes"] = arr;
    text << "envelopes: " << total << " instances, containment failures " << contFails
         << ", max attained " << attained << "/" << total << "\n";
  }

  if (suite == "special-cases" || suite == "all") {
    const std::vector<SuiteCount> counts = specialCaseEqualitySuite(ses.seed, trials);
    json arr = json::array();
    long fails = 0;
    for (const SuiteCount& c : counts) {
      arr.push_back({{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}});
      fails += c.failures;
      if (c.failures > 0 && !haveCx) {
        haveCx = true;
        counterexample = json{{"suite", "special-cases"}, {"name", c.name},
                              {"detail", c.firstFailure}, {"seed", ses.seed},
                              {"trials", trials}};
      }
    }
    violations += fails;
    suites["special-cases"] = arr;
    text << "special cases: " << counts.size() << " cases, " << fails << " failures\n";
  }

  json result{{"suite", suite}, {"violations", violations}, {"suites", suites}};
  if (injectDefect) result["defectInjected"] = true;
  if (haveCx) {
    result["counterexample"] = counterexample;
    if (!cxOut.empty()) writeFileBytes(cxOut, counterexample.dump(2) + "\n");
  }
  text << "violations: " << violations << "\n";
  ses.emit(result, text.str());
  return violations > 0 ? 5 : 0;
}

int exitCodeFor(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::NotHermitian:
    case Errc::NotPsd:
      return 2;
    case Errc::Unsolvable:
    case Errc::RangeHypothesisViolated:
      return 1;
    case Errc::UnsupportedQuery:
      return 4;
    case Errc::RouteDisagreement:
    case Errc::FormulaRangeError:
      return 5;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank/inertia analysis of Hermitian solution sets of AX = B and AXA* = B"};
  app.require_subcommand(1);

  Session ses;
  app.add_option("--output", ses.output, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", ses.seed, "seed for sampled parameters and suites");

  std::string solveKind, paramFile;
  std::vector<std::string> solveFiles;
  CLI::App* solve =
      app.add_subcommand("solve", "decide solvability and print one verified solution");
  solve->add_option("kind", solveKind, "linear | linear-psd | congruence")
      ->required()
      ->check(CLI::IsMember({"linear", "linear-psd", "congruence"}));
  solve->add_option("files", solveFiles, "A.json B.json")->required();
  solve->add_option("--param-file", paramFile, "parameter matrix selecting the solution");

  std::string profKind, signStr = "minus";
  std::vector<std::string> profFiles;
  CLI::App* prof = app.add_subcommand(
      "profile", "closed-form rank/inertia extrema over a solution family");
  prof->add_option("kind", profKind,
                   "linear-vs-p | psd-vs-p | two-linear | two-congruence | completion | "
                   "completion-psd | skew | ls-vs-lr")
      ->required()
      ->check(CLI::IsMember({"linear-vs-p", "psd-vs-p", "two-linear", "two-congruence",
                             "completion", "completion-psd", "skew", "ls-vs-lr"}));
  prof->add_option("files", profFiles, "input matrices in operation order")->required();
  prof->add_option("--sign", signStr, "completion-psd variant: A + BXB* (plus) or A - BXB*")
      ->check(CLI::IsMember({"plus", "minus"}));

  std::string ordKind, relStr, modeStr = "exists";
  std::vector<std::string> ordFiles;
  int split = 0;
  CLI::App* ord =
      app.add_subcommand("order", "decide an ordering or equality statement about solution sets");
  ord->add_option("kind", ordKind,
                  "linear-vs-p | psd-vs-p | two-linear | two-congruence | transformed | average | "
                  "average-partition | average-sum | ls-vs-lr")
      ->required()
      ->check(CLI::IsMember({"linear-vs-p", "psd-vs-p", "two-linear", "two-congruence",
                             "transformed", "average", "average-partition", "average-sum",
                             "ls-vs-lr"}));
  ord->add_option("files", ordFiles, "input matrices in operation order")->required();
  ord->add_option("--relation", relStr, "succ | succeq | prec | preceq | nonsingular | equal")
      ->required()
      ->check(CLI::IsMember({"succ", "succeq", "prec", "preceq", "nonsingular", "equal"}));
  ord->add_option("--mode", modeStr, "exists | forall")
      ->check(CLI::IsMember({"exists", "forall"}));
  ord->add_option("--split", split, "rows of the first block row (average-partition)");

  std::string suite = "all", cxOut;
  int trials = 100, maxDim = 3, vBound = 3, instances = 10;
  bool injectDefect = false;
  CLI::App* ver = app.add_subcommand("verify", "run the self-check suites");
  ver->add_option("--suite", suite, "identities | envelopes | special-cases | all")
      ->check(CLI::IsMember({"identities", "envelopes", "special-cases", "all"}));
  ver->add_option("--trials", trials, "trials per identity/case; draws per envelope instance");
  ver->add_option("--max-dim", maxDim, "largest matrix dimension");
  ver->add_option("--bound", vBound, "entry numerator/denominator bound");
  ver->add_option("--instances", instances, "instances per profile family (envelopes)");
  ver->add_flag("--inject-defect", injectDefect)->group("");
  ver->add_option("--counterexample-out", cxOut, "write the first counterexample here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
  ses.command = echo.str();

  try {
    if (solve->parsed()) return runSolve(ses, solveKind, solveFiles, paramFile);
    if (prof->parsed()) return runProfile(ses, profKind, profFiles, signStr);
    if (ord->parsed()) return runOrder(ses, ordKind, ordFiles, relStr, modeStr, split);
    if (ver->parsed())
      return runVerify(ses, suite, trials, maxDim, vBound, instances, injectDefect, cxOut);
  } catch (const Error& e) {
    std::cerr << "error (" << errcName(e.code()) << "): " << e.what() << "\n";
    return exitCodeFor(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

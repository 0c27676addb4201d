// Copyright 2026 The Zagreb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "combinatorics.h"
#include "error.h"
#include "graph.h"
#include "indices.h"
#include "moments.h"
#include "montecarlo.h"
#include "plaw.h"
#include "regimes.h"
#include "rng.h"

namespace zagreb::verify {
namespace {

using montecarlo::McConfig;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double RelErr(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double MaxRelErr(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, RelErr(a(i, j), b(i, j)));
    }
  }
  return worst;
}

CheckItem AtMost(std::string name, double value, double bound,
                 std::string detail = {}) {
  return {std::move(name), value <= bound, value, bound, std::move(detail)};
}

CheckItem AtLeast(std::string name, double value, double bound,
                  std::string detail = {}) {
  return {std::move(name), value >= bound, value, bound, std::move(detail)};
}

Eigen::MatrixXd TransformAsDouble(unsigned k) {
  const auto a = indices::Transform(k);
  Eigen::MatrixXd m(k, k);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) m(i, j) = ToDouble(a.entries[i][j]);
  }
  return m;
}

void SuiteIdentity(const VerifyOptions& opt, SuiteResult& out) {
  constexpr int kGraphs = 1000;
  constexpr double kProbs[] = {0.1, 0.5, 0.9};
  int star_failures = 0;
  int complement_failures = 0;
  Rng pick(Seed{opt.seed, 0xC0FFEE});
  for (int i = 0; i < kGraphs; ++i) {
    const auto n = static_cast<std::uint64_t>(
        std::ceil(pick.UniformOpenClosed() * 50.0));
    const unsigned k = 1 + i % 8;
    const graph::GnpParams params{n, kProbs[i % 3]};
    const auto g = graph::SampleGnpGraph(params, Seed{opt.seed, std::uint64_t(i)});
    const auto d = graph::DegreesOf(g);
    if (!indices::CheckStarIdentity(d, k).holds) ++star_failures;
    if (!indices::CheckComplementIdentity(d, k).holds) ++complement_failures;
  }
  out.checks.push_back(AtMost("star identity Z = A_k S", star_failures, 0,
                              "failures over 1000 graphs"));
  out.checks.push_back(AtMost("complement identity", complement_failures, 0,
                              "failures over 1000 graphs"));
}

void SuiteOracle(const VerifyOptions&, SuiteResult& out) {
  constexpr unsigned kOrder = 4;
  double mean_err = 0.0, var_err = 0.0, star_err = 0.0, zagreb_err = 0.0;
  for (std::uint64_t n : {3, 4, 5}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const graph::GnpParams params{n, p};
      const auto oracle = moments::EnumerateOracle(params, kOrder);
      const auto zagreb = moments::ExactZagrebMoments(params, kOrder);
      const auto stars = moments::ExactStarMoments(params, kOrder);
      for (unsigned m = 1; m <= kOrder; ++m) {
        mean_err = std::max(mean_err,
                            RelErr(moments::ExactMeanZagreb(params, m),
                                   oracle.zagreb.mean(m - 1)));
        var_err = std::max(var_err,
                           RelErr(moments::ExactVarZagreb(params, m),
                                  oracle.zagreb.cov(m - 1, m - 1)));
      }
      star_err = std::max(star_err, MaxRelErr(stars.cov, oracle.stars.cov));
      star_err = std::max(star_err, MaxRelErr(stars.mean, oracle.stars.mean));
      zagreb_err =
          std::max(zagreb_err, MaxRelErr(zagreb.cov, oracle.zagreb.cov));
    }
  }
  constexpr double kTol = 1e-9;
  out.checks.push_back(AtMost("exact mean Z^(k) vs enumeration", mean_err, kTol));
  out.checks.push_back(AtMost("exact Var Z^(k) vs enumeration", var_err, kTol));
  out.checks.push_back(AtMost("exact star moments vs enumeration", star_err, kTol));
  out.checks.push_back(
      AtMost("exact Zagreb covariance matrix vs enumeration", zagreb_err, kTol));

  const graph::GnpParams spot{3, 0.5};
  const auto spot_oracle = moments::EnumerateOracle(spot, 2);
  const struct {
    const char* name;
    double exact;
    double oracle;
    double expected;
  } spots[] = {
      {"Mean[Z2] at n=3, p=0.5", moments::ExactMeanZagreb(spot, 2),
       spot_oracle.zagreb.mean(1), 4.5},
      {"Var[Z2] at n=3, p=0.5", moments::ExactVarZagreb(spot, 2),
       spot_oracle.zagreb.cov(1, 1), 12.75},
      {"Cov(S2, S3) at n=3, p=0.5", moments::ExactCovStar(spot, 1, 2),
       spot_oracle.stars.cov(0, 1), 1.5},
  };
  for (const auto& s : spots) {
    const double err =
        std::max(RelErr(s.exact, s.expected), RelErr(s.oracle, s.expected));
    out.checks.push_back(AtMost(s.name, err, 1e-12,
                                "formula " + limits::FormatDecimal(s.exact)));
  }
}

void SuiteMatrices(const VerifyOptions&, SuiteResult& out) {
  double det_err = 0.0, transform_err = 0.0;
  double min_eigen = std::numeric_limits<double>::infinity();
  for (double c : {0.5, 1.0, 2.0}) {
    for (unsigned k = 1; k <= 8; ++k) {
      const Eigen::MatrixXd s = limits::SigmaStar(c, k).matrix;
      det_err = std::max(det_err, RelErr(limits::SigmaStarDet(c, k),
                                         s.partialPivLu().determinant()));
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
      min_eigen = std::min(min_eigen, eig.eigenvalues().minCoeff());
      if (k <= 6) {
        const Eigen::MatrixXd a = TransformAsDouble(k);
        transform_err =
            std::max(transform_err, MaxRelErr(limits::SigmaZagreb(c, k).matrix,
                                              a * s * a.transpose()));
      }
    }
  }
  out.checks.push_back(
      AtMost("det SigmaStar closed form vs LU, k<=8", det_err, 1e-9));
  out.checks.push_back(
      AtMost("Sigma_k = A_k SigmaStar A_k^T, k<=6", transform_err, 1e-9));
  out.checks.push_back(
      {"SigmaStar positive definite, k<=8", min_eigen > 0.0, min_eigen, 0.0,
       "smallest eigenvalue"});
  Eigen::MatrixXd expected(3, 3);
  expected << 2, 6, 20, 6, 20, 72, 20, 72, 278;
  out.checks.push_back(AtMost("Sigma_3(1) = 2[[1,3,10],[3,10,36],[10,36,139]]",
                              MaxRelErr(limits::SigmaZagreb(1.0, 3).matrix,
                                        expected),
                              1e-12));
}

McConfig CltConfig(const char* law, std::uint64_t n, const VerifyOptions& opt) {
  McConfig c;
  c.n = n;
  c.p_source = limits::ParsePLaw(law);
  c.k = 3;
  c.replicates = 5000;
  c.master_seed = opt.seed;
  c.workers = opt.workers;
  c.tests = {"ks"};
  return c;
}

// Standardizes the Zagreb columns per the regime and runs the KS tests.
Eigen::MatrixXd RunClt(const McConfig& config, SuiteResult& out) {
  const auto experiment = montecarlo::RunExperiment(config);
  const auto& law = std::get<limits::PLaw>(config.p_source);
  const auto regime = limits::ClassifyRegime(law, config.k);
  const auto st = limits::Standardizer(
      regime, {config.n, config.EvaluatedP()}, config.k);
  const auto standardized =
      montecarlo::StandardizeSamples(experiment.samples, st.norms);
  out.tests = montecarlo::RunRequestedTests(config, experiment);
  for (const auto& t : out.tests) {
    out.checks.push_back(AtLeast(t.name + " p-value", t.p_value, t.alpha,
                                 "D = " + limits::FormatDecimal(t.statistic)));
  }
  return montecarlo::EmpiricalMoments(standardized).cov;
}

void AddCorrelationCheck(const Eigen::MatrixXd& cov, SuiteResult& out) {
  const Eigen::MatrixXd corr = montecarlo::Correlations(cov);
  double lowest = 1.0;
  for (Eigen::Index i = 0; i < corr.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < corr.cols(); ++j) {
      lowest = std::min(lowest, corr(i, j));
    }
  }
  out.checks.push_back(AtLeast("min pairwise correlation", lowest, 0.95));
}

void SuiteCltCritical(const VerifyOptions& opt, SuiteResult& out) {
  const McConfig config = CltConfig("1*n^-1", 2000, opt);
  const Eigen::MatrixXd cov = RunClt(config, out);
  out.checks.push_back(
      AtMost("relative Frobenius error vs Sigma_3(1)",
             montecarlo::CompareCov(cov, limits::SigmaZagreb(1.0, 3)), 0.15));
}

void SuiteCltDense(const VerifyOptions& opt, SuiteResult& out) {
  AddCorrelationCheck(RunClt(CltConfig("0.5", 500, opt), out), out);
}

void SuiteCltSparse(const VerifyOptions& opt, SuiteResult& out) {
  AddCorrelationCheck(RunClt(CltConfig("1*n^-1.5", 10000, opt), out), out);
}

void SuitePoisson(const VerifyOptions& opt, SuiteResult& out) {
  McConfig c;
  c.n = 100;
  c.p_source = limits::ParsePLaw("2*n^-2");
  c.k = 1;
  c.replicates = 10000;
  c.master_seed = opt.seed;
  c.workers = opt.workers;
  c.tests = {"poisson"};
  out.tests = montecarlo::RunRequestedTests(c, montecarlo::RunExperiment(c));
  for (const auto& t : out.tests) {
    out.checks.push_back(AtLeast(t.name + " p-value", t.p_value, t.alpha,
                                 "chi-square " +
                                     limits::FormatDecimal(t.statistic)));
  }
}

struct RatioStats {
  double mean = 0.0;
  double sd = 0.0;
};

RatioStats Summarize(const std::vector<double>& x) {
  montecarlo::SampleMatrix s;
  s.labels = {"ratio"};
  s.values = Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
  const auto m = montecarlo::EmpiricalMoments(s);
  return {m.mean(0), std::sqrt(m.cov(0, 0))};
}

void SuiteWlln(const VerifyOptions& opt, SuiteResult& out) {
  {
    McConfig c;
    c.n = 500;
    c.p_source = 0.3;
    c.k = 3;
    c.replicates = 1000;
    c.master_seed = opt.seed;
    c.workers = opt.workers;
    const auto e = montecarlo::RunExperiment(c);
    const graph::GnpParams params{c.n, 0.3};
    for (unsigned m = 1; m <= c.k; ++m) {
      const double mean = moments::ExactMeanZagreb(params, m);
      std::vector<double> ratio(c.replicates);
      for (std::uint64_t r = 0; r < c.replicates; ++r) {
        ratio[r] = e.samples.values(r, m - 1) / mean;
      }
      const RatioStats st = Summarize(ratio);
      const std::string label = "Z" + std::to_string(m) + "/E[Z" +
                                std::to_string(m) + "] at n=500, p=0.3";
      out.checks.push_back(AtMost(label + ": |mean - 1|",
                                  std::abs(st.mean - 1.0), 0.01));
      out.checks.push_back(AtMost(label + ": s.d.", st.sd, 0.05));
    }
  }
  {
    McConfig c;
    c.n = 300;
    c.p_source = limits::ParsePLaw("1-2*n^-1");
    c.k = 2;
    c.replicates = 1000;
    c.master_seed = opt.seed;
    c.workers = opt.workers;
    const auto e = montecarlo::RunExperiment(c);
    const double p = c.EvaluatedP();
    const ExactInt n = c.n;
    const ExactInt top = n * boost::multiprecision::pow(n - 1, c.k);
    const double denom = std::pow(300.0, c.k + 1) * (1.0 - std::pow(p, c.k));
    std::vector<double> ratio(c.replicates);
    const std::size_t cols = e.samples.cols();
    for (std::uint64_t r = 0; r < c.replicates; ++r) {
      ratio[r] = ToDouble(top - e.samples.exact[r * cols + c.k - 1]) / denom;
    }
    out.checks.push_back(AtMost(
        "(n(n-1)^2 - Z2)/(n^3(1-p^2)) at n=300, p=1-2/n: |mean - 1|",
        std::abs(Summarize(ratio).mean - 1.0), 0.10));
  }
}

void SuiteDeterminism(const VerifyOptions& opt, SuiteResult& out) {
  std::string csv[2];
  const unsigned workers[2] = {1, 8};
  for (int i = 0; i < 2; ++i) {
    VerifyOptions o = opt;
    o.workers = workers[i];
    McConfig c = CltConfig("1*n^-1", 2000, o);
    c.tests.clear();
    std::ostringstream s;
    montecarlo::WriteCsv(montecarlo::RunExperiment(c).samples, s);
    csv[i] = s.str();
  }
  out.checks.push_back({"sample CSV identical for 1 and 8 workers",
                        csv[0] == csv[1], static_cast<double>(csv[0].size()),
                        static_cast<double>(csv[1].size()), "bytes"});
}

void SuiteRegime(const VerifyOptions&, SuiteResult& out) {
  int mismatches = 0;
  std::string detail;
  for (const auto& f : RegimeFixtures()) {
    const auto r = limits::ClassifyRegime(limits::ParsePLaw(f.law), f.k);
    const bool param_ok =
        std::isnan(f.parameter)
            ? !r.parameter.has_value()
            : (r.parameter.has_value() && *r.parameter == f.parameter);
    if (limits::RegimeName(r.regime) != f.regime || !param_ok ||
        r.joint_law_open != f.joint_open) {
      ++mismatches;
      detail += std::string(f.law) + " ";
    }
  }
  out.checks.push_back(AtMost("regime fixtures", mismatches, 0, detail));

  // Parser goldens: text -> canonical form, or the error and its column.
  const struct {
    const char* text;
    const char* canonical;  // nullptr if an error is expected
    ErrorCode code;
    long column;
  } goldens[] = {
      {"0.5", "0.5", {}, -1},
      {"2*n^-1", "2*n^-1", {}, -1},
      {"1-3*n^-2", "1-3*n^-2", {}, -1},
      {" 2 * n ^ - 1.5 ", "2*n^-1.5", {}, -1},
      {"1 - 0.25*n^-0.5", "1-0.25*n^-0.5", {}, -1},
      {"1.5", nullptr, ErrorCode::kDomain, -1},
      {"", nullptr, ErrorCode::kParse, 0},
      {"2*n^", nullptr, ErrorCode::kParse, 4},
      {"2*m^-1", nullptr, ErrorCode::kParse, 2},
      {"3-2*n^-1", nullptr, ErrorCode::kParse, 0},
      {"1-0.5", nullptr, ErrorCode::kParse, 5},
      {"0.5 x", nullptr, ErrorCode::kParse, 4},
      {".5", nullptr, ErrorCode::kParse, 0},
  };
  int parser_failures = 0;
  std::string parser_detail;
  for (const auto& g : goldens) {
    bool ok = false;
    try {
      const auto law = limits::ParsePLaw(g.text);
      ok = g.canonical != nullptr && limits::FormatPLaw(law) == g.canonical &&
           limits::ParsePLaw(limits::FormatPLaw(law)) == law;
    } catch (const ParseError& e) {
      ok = g.canonical == nullptr && g.code == ErrorCode::kParse &&
           e.column() == g.column;
    } catch (const Error& e) {
      ok = g.canonical == nullptr && e.code() == g.code;
    }
    if (!ok) {
      ++parser_failures;
      parser_detail += std::string("'") + g.text + "' ";
    }
  }
  out.checks.push_back(
      AtMost("p-law parser goldens", parser_failures, 0, parser_detail));
}

struct SuiteSpec {
  const char* name;
  int criterion;
  double time_limit_s;
  void (*run)(const VerifyOptions&, SuiteResult&);
};

const SuiteSpec kSuites[] = {
    {"identity", 1, 10.0, SuiteIdentity},
    {"oracle", 2, 60.0, SuiteOracle},
    {"matrices", 3, 1.0, SuiteMatrices},
    {"clt-critical", 4, 120.0, SuiteCltCritical},
    {"clt-dense", 5, 120.0, SuiteCltDense},
    {"clt-sparse", 6, 120.0, SuiteCltSparse},
    {"poisson", 7, 30.0, SuitePoisson},
    {"wlln", 8, 60.0, SuiteWlln},
    {"determinism", 9, 0.0, SuiteDeterminism},
    {"regime", 10, 0.0, SuiteRegime},
};

SuiteResult Run(const SuiteSpec& spec, const VerifyOptions& options) {
  SuiteResult result;
  result.suite = spec.name;
  result.criterion = spec.criterion;
  const auto start = std::chrono::steady_clock::now();
  spec.run(options, result);
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (spec.time_limit_s > 0.0) {
    result.checks.push_back(
        AtMost("runtime (s)", result.seconds, spec.time_limit_s));
  }
  return result;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckItem& c) { return c.pass; });
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.push_back(s.name);
    return v;
  }();
  return names;
}

std::vector<SuiteResult> RunSuite(std::string_view name,
                                  const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  for (const auto& spec : kSuites) {
    if (name == "all" || name == spec.name) {
      results.push_back(Run(spec, options));
    }
  }
  if (results.empty()) {
    Fail(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) +
                                          "'");
  }
  return results;
}

const std::vector<RegimeFixture>& RegimeFixtures() {
  static const std::vector<RegimeFixture> fixtures = {
      {"1*n^-3", 2, "DegenerateZero", kNaN, false},
      {"2*n^-2", 3, "PoissonHalfLambda", 2.0, false},
      {"1-1*n^-3", 2, "DegenerateComplete", kNaN, false},
      {"1-3*n^-2", 2, "PoissonComplement", 3.0, false},
      {"1*n^-1.5", 3, "CLT-Sparse", kNaN, false},
      {"1*n^-1", 3, "CLT-Critical", 1.0, false},
      {"0.5", 2, "CLT-Dense", kNaN, false},
      {"1-2*n^-1", 2, "CLT-Single", kNaN, true},
  };
  return fixtures;
}

}  // namespace zagreb::verify

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

#include "montecarlo.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "combinatorics.h"
#include "error.h"
#include "graph.h"
#include "indices.h"
#include "numeric.h"
#include "rng.h"

namespace zagreb::montecarlo {
namespace {

constexpr unsigned kMaxWorkers = 256;

std::vector<std::string> ColumnLabels(const McConfig& config) {
  std::vector<std::string> labels;
  if (config.collect_zagreb) {
    for (unsigned m = 1; m <= config.k; ++m) {
      labels.push_back("Z" + std::to_string(m));
    }
  }
  if (config.collect_stars) {
    for (unsigned m = 1; m <= config.k; ++m) {
      labels.push_back("S" + std::to_string(m + 1));
    }
  }
  return labels;
}

void FillRow(const McConfig& config, const graph::GnpParams& params,
             std::uint64_t r, ExactInt* out) {
  const graph::DegreeSequence d =
      graph::SampleGnpDegrees(params, Seed{config.master_seed, r});
  std::size_t j = 0;
  if (config.collect_zagreb) {
    auto z = indices::ZagrebVector(d, config.k);
    for (auto& v : z.values) out[j++] = std::move(v);
  }
  if (config.collect_stars) {
    auto s = indices::StarVectorOf(d, config.k);
    for (auto& v : s.values) out[j++] = std::move(v);
  }
}

// Zagreb columns of `experiment` as Z^(1..k).
Eigen::MatrixXd ZagrebColumns(const McConfig& config,
                              const Experiment& experiment) {
  if (!config.collect_zagreb) {
    Fail(ErrorCode::kInvalidArgument, "tests need the Zagreb columns");
  }
  return experiment.samples.values.leftCols(config.k);
}

std::vector<limits::Normalizer> KsNormalizers(const McConfig& config,
                                              const graph::GnpParams& params) {
  if (const auto* law = std::get_if<limits::PLaw>(&config.p_source)) {
    const auto regime = limits::ClassifyRegime(*law, config.k);
    auto st = limits::Standardizer(regime, params, config.k);
    // Each marginal's limit is N(0, target_mm); rescale to unit variance.
    for (unsigned m = 0; m < config.k; ++m) {
      st.norms[m].scale *= std::sqrt(st.target.matrix(m, m));
    }
    return st.norms;
  }
  std::vector<limits::Normalizer> norms;
  for (unsigned m = 1; m <= config.k; ++m) {
    const double var = moments::ExactVarZagreb(params, m);
    if (!(var > 0.0)) {
      Fail(ErrorCode::kDomain, "Z" + std::to_string(m) + " has zero variance");
    }
    norms.push_back({m, moments::ExactMeanZagreb(params, m), std::sqrt(var)});
  }
  return norms;
}

}  // namespace

double McConfig::EvaluatedP() const {
  if (const auto* p = std::get_if<double>(&p_source)) return *p;
  return std::get<limits::PLaw>(p_source).Evaluate(n);
}

void McConfig::Validate() const {
  if (replicates < 1) {
    Fail(ErrorCode::kInvalidArgument, "replicates must be at least 1");
  }
  if (k < 1 || k > combinatorics::kMaxOrder) {
    Fail(ErrorCode::kDomain, "index order must be in 1.." +
                                 std::to_string(combinatorics::kMaxOrder));
  }
  if (!collect_zagreb && !collect_stars) {
    Fail(ErrorCode::kInvalidArgument, "nothing to collect");
  }
  if (n > graph::kDefaultMaxSampledVertices) {
    Fail(ErrorCode::kSizeGuard,
         "n above " + std::to_string(graph::kDefaultMaxSampledVertices));
  }
  graph::GnpParams{n, EvaluatedP()}.Validate();
  for (const auto& t : tests) {
    if (t != "ks" && t != "poisson") {
      Fail(ErrorCode::kInvalidArgument, "unknown test '" + t + "'");
    }
  }
}

void WriteCsv(const SampleMatrix& samples, std::ostream& out) {
  out << "replicate";
  for (const auto& label : samples.labels) out << ',' << label;
  out << '\n';
  const std::size_t cols = samples.cols();
  const bool exact = !samples.exact.empty();
  for (std::uint64_t r = 0; r < samples.rows(); ++r) {
    out << r;
    for (std::size_t j = 0; j < cols; ++j) {
      out << ',';
      if (exact) {
        out << ToString(samples.exact[r * cols + j]);
      } else {
        out << limits::FormatDecimal(samples.values(r, j));
      }
    }
    out << '\n';
  }
}

Experiment RunExperiment(const McConfig& config) {
  config.Validate();
  const graph::GnpParams params{config.n, config.EvaluatedP()};
  SampleMatrix s;
  s.labels = ColumnLabels(config);
  s.master_seed = config.master_seed;
  const std::uint64_t rows = config.replicates;
  const std::size_t cols = s.labels.size();
  s.exact.resize(rows * cols);

  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(
      std::max(config.workers, 1u), 1, std::min<std::uint64_t>(rows, kMaxWorkers)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      // Rows are split into contiguous blocks; a row depends only on r.
      const std::uint64_t begin = rows * w / workers;
      const std::uint64_t end = rows * (w + 1) / workers;
      for (std::uint64_t r = begin; r < end; ++r) {
        FillRow(config, params, r, &s.exact[r * cols]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  s.values.resize(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      s.values(r, j) = ToDouble(s.exact[r * cols + j]);
    }
  }
  Experiment e;
  e.moments = EmpiricalMoments(s);
  e.moments.params = params;
  e.moments.k = config.k;
  e.samples = std::move(s);
  return e;
}

moments::MomentReport EmpiricalMoments(const SampleMatrix& samples) {
  const std::uint64_t rows = samples.rows();
  const std::size_t cols = samples.cols();
  if (rows == 0) Fail(ErrorCode::kInvalidArgument, "no replicates");
  moments::MomentReport report;
  report.labels = samples.labels;
  report.source = moments::MomentSource::kMonteCarlo;
  report.k = static_cast<unsigned>(cols);
  report.mean.resize(cols);
  report.cov = Eigen::MatrixXd::Zero(cols, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    CompensatedSum sum;
    for (std::uint64_t r = 0; r < rows; ++r) sum.Add(samples.values(r, j));
    report.mean(j) = sum.Value() / static_cast<double>(rows);
  }
  if (rows < 2) return report;
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = a; b < cols; ++b) {
      CompensatedSum sum;
      for (std::uint64_t r = 0; r < rows; ++r) {
        sum.Add((samples.values(r, a) - report.mean(a)) *
                (samples.values(r, b) - report.mean(b)));
      }
      report.cov(a, b) = report.cov(b, a) =
          sum.Value() / static_cast<double>(rows - 1);
    }
  }
  return report;
}

SampleMatrix StandardizeSamples(const SampleMatrix& samples,
                                const std::vector<limits::Normalizer>& norms) {
  if (norms.size() != samples.cols()) {
    Fail(ErrorCode::kInvalidArgument, "need one normalizer per column");
  }
  SampleMatrix out;
  out.labels = samples.labels;
  out.master_seed = samples.master_seed;
  out.values = samples.values;
  for (std::size_t j = 0; j < norms.size(); ++j) {
    if (!(norms[j].scale > 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "scale must be positive");
    }
    out.values.col(j) =
        (out.values.col(j).array() - norms[j].center) / norms[j].scale;
  }
  return out;
}

double CompareCov(const Eigen::MatrixXd& empirical,
                  const limits::CovModel& target) {
  if (empirical.rows() != target.matrix.rows() ||
      empirical.cols() != target.matrix.cols()) {
    Fail(ErrorCode::kInvalidArgument, "covariance shapes differ");
  }
  const double norm = target.matrix.norm();
  if (!(norm > 0.0)) Fail(ErrorCode::kDomain, "target matrix is zero");
  return (empirical - target.matrix).norm() / norm;
}

Eigen::MatrixXd Correlations(const Eigen::MatrixXd& cov) {
  const Eigen::VectorXd sd = cov.diagonal().cwiseSqrt();
  Eigen::MatrixXd corr(cov.rows(), cov.cols());
  for (Eigen::Index a = 0; a < cov.rows(); ++a) {
    for (Eigen::Index b = 0; b < cov.cols(); ++b) {
      corr(a, b) = cov(a, b) / (sd(a) * sd(b));
    }
  }
  return corr;
}

std::vector<TestResult> RunRequestedTests(const McConfig& config,
                                          const Experiment& experiment,
                                          double alpha) {
  const graph::GnpParams params{config.n, config.EvaluatedP()};
  std::vector<TestResult> results;
  for (const auto& name : config.tests) {
    if (name == "ks") {
      SampleMatrix z;
      z.labels.assign(experiment.samples.labels.begin(),
                      experiment.samples.labels.begin() + config.k);
      z.values = ZagrebColumns(config, experiment);
      const SampleMatrix std_z =
          StandardizeSamples(z, KsNormalizers(config, params));
      for (unsigned m = 0; m < config.k; ++m) {
        const Eigen::VectorXd col = std_z.values.col(m);
        TestResult t = KsTestNormal(
            std::span<const double>(col.data(), col.size()), alpha);
        t.name = "ks-normal:" + z.labels[m];
        results.push_back(std::move(t));
      }
    } else if (name == "poisson") {
      if (!config.collect_zagreb || experiment.samples.exact.empty()) {
        Fail(ErrorCode::kInvalidArgument, "poisson test needs raw Z1 values");
      }
      const std::size_t cols = experiment.samples.cols();
      std::vector<std::uint64_t> histogram;
      std::uint64_t off_lattice = 0;
      for (std::uint64_t r = 0; r < experiment.samples.rows(); ++r) {
        const ExactInt& z1 = experiment.samples.exact[r * cols];
        if (z1 % 2 != 0) {
          ++off_lattice;
          continue;
        }
        const std::uint64_t half = ToUint64(z1 / 2);
        if (half >= histogram.size()) histogram.resize(half + 1, 0);
        ++histogram[half];
      }
      const double n = static_cast<double>(config.n);
      TestResult t =
          ChiSquarePoisson(histogram, n * n * params.p / 2.0, alpha, off_lattice);
      t.name = "chisq-poisson:Z1/2";
      results.push_back(std::move(t));
    }
  }
  return results;
}

}  // namespace zagreb::montecarlo

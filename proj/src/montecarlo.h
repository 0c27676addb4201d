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

// Seeded, parallel G(n, p) replication, empirical moments, and the
// goodness-of-fit checks that compare samples with their limit laws.

#ifndef ZAGREB_MONTECARLO_H_
#define ZAGREB_MONTECARLO_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "exact_int.h"
#include "gof.h"
#include "regimes.h"
#include "moments.h"
#include "plaw.h"

namespace zagreb::montecarlo {

struct McConfig {
  std::uint64_t n = 1;
  std::variant<double, limits::PLaw> p_source = 0.5;
  unsigned k = 1;
  std::uint64_t replicates = 1;
  std::uint64_t master_seed = 0;
  bool collect_zagreb = true;
  bool collect_stars = false;
  // Number of threads. Has no effect on any output.
  unsigned workers = 1;
  // Subset of {"ks", "poisson"}.
  std::vector<std::string> tests;

  double EvaluatedP() const;
  // Throws kInvalidArgument / kDomain.
  void Validate() const;
};

// Replicates x columns. `exact` holds the integer values row-major while
// the matrix is raw; standardize_samples drops it.
struct SampleMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  std::vector<ExactInt> exact;
  std::uint64_t master_seed = 0;

  std::uint64_t rows() const { return values.rows(); }
  std::uint64_t cols() const { return values.cols(); }
};

// Header "replicate,<labels>", then one line per replicate. Exact values
// are written as integers, standardized ones with 17 significant digits.
void WriteCsv(const SampleMatrix& samples, std::ostream& out);

struct Experiment {
  SampleMatrix samples;
  moments::MomentReport moments;
};

// Row r holds the indices of SampleGnpDegrees(params, {master_seed, r}).
// Columns are Z1..Zk then S2..S(k+1), as selected.
Experiment RunExperiment(const McConfig& config);

// Column means and the unbiased (R - 1) covariance, accumulated in
// replicate order. A single replicate gives zero covariance.
moments::MomentReport EmpiricalMoments(const SampleMatrix& samples);

// Entry (r, j) -> (value - center_j) / scale_j. Requires one normalizer per
// column.
SampleMatrix StandardizeSamples(const SampleMatrix& samples,
                                const std::vector<limits::Normalizer>& norms);

// ||empirical - target||_F / ||target||_F.
double CompareCov(const Eigen::MatrixXd& empirical,
                  const limits::CovModel& target);

// Pearson correlation matrix of the columns.
Eigen::MatrixXd Correlations(const Eigen::MatrixXd& cov);

// Runs config.tests against the Zagreb columns of `experiment`:
//   "ks"      each Z^(m) standardized to mean 0, variance 1 (regime
//             normalization for a p-law, exact moments for a fixed p), then
//             KS against N(0, 1).
//   "poisson" Z^(1)/2 against Poi(n^2 p / 2), chi-square.
std::vector<TestResult> RunRequestedTests(const McConfig& config,
                                          const Experiment& experiment,
                                          double alpha = 0.01);

}  // namespace zagreb::montecarlo

#endif  // ZAGREB_MONTECARLO_H_

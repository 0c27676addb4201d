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

// Goodness-of-fit machinery: one-sample Kolmogorov-Smirnov against N(0, 1),
// Pearson chi-square against a Poisson law, and the special functions they
// need.

#ifndef ZAGREB_GOF_H_
#define ZAGREB_GOF_H_

#include <cstdint>
#include <span>
#include <string>

namespace zagreb::montecarlo {

struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 0.0;
  double alpha = 0.0;
  bool pass = false;  // p_value >= alpha
  // Set when the input contained values off the test's support.
  bool flagged = false;
};

// Standard normal CDF. Absolute error below 1e-15 (via std::erfc).
double NormalCdf(double x);

// P(K > x) for the Kolmogorov distribution. Absolute error below 1e-12.
double KolmogorovSurvival(double x);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P.
// Series for x < a + 1, continued fraction otherwise; absolute error
// below 1e-10 for a > 0, x >= 0.
double RegularizedGammaP(double a, double x);
double RegularizedGammaQ(double a, double x);

// sup_x |F_n(x) - Phi(x)| over the empirical CDF of `sample`.
double KsStatistic(std::span<const double> sample);

// Requires at least 50 observations.
TestResult KsTestNormal(std::span<const double> sample, double alpha);

inline constexpr double kMinExpectedPerBin = 5.0;

// histogram[j] = number of observations equal to j. Bins are pooled left to
// right until each expected count reaches 5; everything above the last
// full bin forms the tail bin. `off_lattice` observations (not integers)
// are added to the tail bin and set `flagged`. Throws kInvalidArgument if
// fewer than two bins remain.
TestResult ChiSquarePoisson(std::span<const std::uint64_t> histogram,
                            double lambda, double alpha,
                            std::uint64_t off_lattice = 0);

}  // namespace zagreb::montecarlo

#endif  // ZAGREB_GOF_H_

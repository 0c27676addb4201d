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

#include "gof.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "error.h"

namespace zagreb::montecarlo {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 10000;

double GammaPrefactor(double a, double x) {
  return std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double GammaSeries(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * GammaPrefactor(a, x);
}

// Modified Lentz evaluation of the continued fraction for Q(a, x).
double GammaContinuedFraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return GammaPrefactor(a, x) * h;
}

void CheckGammaArgs(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    Fail(ErrorCode::kDomain, "incomplete gamma needs a > 0 and x >= 0");
  }
}

TestResult Finish(std::string name, double statistic, double p_value,
                  double alpha) {
  p_value = std::clamp(p_value, 0.0, 1.0);
  return {std::move(name), statistic, p_value, alpha, p_value >= alpha, false};
}

}  // namespace

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double KolmogorovSurvival(double x) {
  if (!(x > 0.0)) return 1.0;
  if (x < 1.18) {
    // Small-x form of the CDF; the alternating series converges too slowly.
    const double w = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double cdf = 0.0;
    for (int j = 1;; j += 2) {
      const double term = std::exp(-static_cast<double>(j) * j * w);
      cdf += term;
      if (term < 1e-17) break;
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / x;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1;; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double RegularizedGammaP(double a, double x) {
  CheckGammaArgs(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return GammaSeries(a, x);
  return 1.0 - GammaContinuedFraction(a, x);
}

double RegularizedGammaQ(double a, double x) {
  CheckGammaArgs(a, x);
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - GammaSeries(a, x);
  return GammaContinuedFraction(a, x);
}

double KsStatistic(std::span<const double> sample) {
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = NormalCdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

TestResult KsTestNormal(std::span<const double> sample, double alpha) {
  if (sample.size() < 50) {
    Fail(ErrorCode::kInvalidArgument,
         "Kolmogorov-Smirnov test needs at least 50 observations");
  }
  const double d = KsStatistic(sample);
  const double x = std::sqrt(static_cast<double>(sample.size())) * d;
  return Finish("ks-normal", d, KolmogorovSurvival(x), alpha);
}

TestResult ChiSquarePoisson(std::span<const std::uint64_t> histogram,
                            double lambda, double alpha,
                            std::uint64_t off_lattice) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    Fail(ErrorCode::kInvalidArgument, "Poisson mean must be positive");
  }
  double total = static_cast<double>(off_lattice);
  for (auto h : histogram) total += static_cast<double>(h);
  if (total <= 0.0) Fail(ErrorCode::kInvalidArgument, "empty histogram");

  const auto observed = [&](std::uint64_t j) {
    return j < histogram.size() ? static_cast<double>(histogram[j]) : 0.0;
  };
  struct Bin {
    double expected;
    double observed;
  };
  std::vector<Bin> bins;
  Bin current{0.0, 0.0};
  double remaining = total;  // expected count of values >= j
  std::uint64_t j = 0;
  for (;; ++j) {
    const double log_pmf =
        -lambda + j * std::log(lambda) - std::lgamma(j + 1.0);
    const double expected = total * std::exp(log_pmf);
    current.expected += expected;
    current.observed += observed(j);
    remaining -= expected;
    if (remaining < kMinExpectedPerBin) break;
    if (current.expected >= kMinExpectedPerBin) {
      bins.push_back(current);
      current = {0.0, 0.0};
    }
  }
  // Tail: values above j plus anything off the integer lattice.
  current.expected += std::max(remaining, 0.0);
  for (std::uint64_t t = j + 1; t < histogram.size(); ++t) {
    current.observed += static_cast<double>(histogram[t]);
  }
  current.observed += static_cast<double>(off_lattice);
  if (current.expected < kMinExpectedPerBin && !bins.empty()) {
    bins.back().expected += current.expected;
    bins.back().observed += current.observed;
  } else {
    bins.push_back(current);
  }
  if (bins.size() < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "pooling to expected counts >= 5 leaves fewer than two bins");
  }

  double statistic = 0.0;
  for (const auto& bin : bins) {
    const double diff = bin.observed - bin.expected;
    statistic += diff * diff / bin.expected;
  }
  const double dof = static_cast<double>(bins.size() - 1);
  TestResult result = Finish("chisq-poisson", statistic,
                             RegularizedGammaQ(dof / 2.0, statistic / 2.0),
                             alpha);
  result.flagged = off_lattice != 0;
  return result;
}

}  // namespace zagreb::montecarlo

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

#include "moments.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "combinatorics.h"
#include "error.h"
#include "numeric.h"

namespace zagreb::moments {
namespace {

using combinatorics::Binomial;
using combinatorics::Factorial;
using combinatorics::FallingFactorial;
using combinatorics::Multinomial;
using combinatorics::Stirling2;

void CheckIndexOrder(unsigned k) {
  if (k < 1 || k > combinatorics::kMaxOrder) {
    Fail(ErrorCode::kDomain, "index order must be in 1.." +
                                 std::to_string(combinatorics::kMaxOrder));
  }
}

void CheckStarOrder(const graph::GnpParams& params, unsigned m) {
  if (m < 1 || m + 1 > params.n) {
    Fail(ErrorCode::kDomain, "star order " + std::to_string(m) +
                                 " outside 1..n-1 for n = " +
                                 std::to_string(params.n));
  }
}

// Adds weight * Cov(S_{m+1}, S_{l+1}) to `acc`. Terms whose multinomial or
// binomial would need a negative argument are zero, which the s-range and
// the n >= 2 guard encode.
void AddStarCovTerms(const graph::GnpParams& params, unsigned m, unsigned l,
                     const ExactInt& weight, CompensatedSum& acc) {
  const std::uint64_t n = params.n;
  const double p = params.p;
  const std::int64_t lo =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(m + l) -
                                    static_cast<std::int64_t>(n) + 1);
  const std::int64_t hi = std::min(m, l);
  for (std::int64_t s = lo; s <= hi; ++s) {
    const std::array<std::uint64_t, 4> parts = {
        static_cast<std::uint64_t>(s), m - static_cast<std::uint64_t>(s),
        l - static_cast<std::uint64_t>(s),
        n + static_cast<std::uint64_t>(s) - m - l - 1};
    const ExactInt coeff = weight * n * Multinomial(n - 1, parts);
    acc.Add(ScaledProduct(coeff, p, m + l - static_cast<unsigned>(s),
                          OneMinusPow(p, static_cast<unsigned>(s))));
  }
  if (n >= 2) {
    const ExactInt coeff = weight * n * (n - 1) * Binomial(n - 2, m - 1) *
                           Binomial(n - 2, l - 1);
    acc.Add(ScaledProduct(coeff, p, m + l - 1, OneMinus(p)));
  }
}

double StarCov(const graph::GnpParams& params, unsigned m, unsigned l) {
  CompensatedSum acc;
  AddStarCovTerms(params, m, l, 1, acc);
  return acc.Value();
}

std::vector<std::string> Labels(char prefix, unsigned first, unsigned k) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < k; ++i) {
    out.push_back(prefix + std::to_string(first + i));
  }
  return out;
}

Eigen::MatrixXd TransformAsDouble(unsigned k) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned l = 1; l <= m; ++l) {
      a(m - 1, l - 1) = ToDouble(Factorial(l) * Stirling2(m, l));
    }
  }
  return a;
}

double IntPow(double base, unsigned exponent) {
  double result = 1.0;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1;
    base *= base;
  }
  return result;
}

MomentReport MakeReport(const graph::GnpParams& params, unsigned k,
                        MomentSource source, std::vector<std::string> labels) {
  MomentReport r;
  r.k = k;
  r.labels = std::move(labels);
  r.mean = Eigen::VectorXd::Zero(k);
  r.cov = Eigen::MatrixXd::Zero(k, k);
  r.source = source;
  r.params = params;
  return r;
}

}  // namespace

std::string_view SourceName(MomentSource source) {
  switch (source) {
    case MomentSource::kExactFormula:
      return "exact";
    case MomentSource::kAsymptotic:
      return "asymptotic";
    case MomentSource::kEnumeration:
      return "enumeration";
    case MomentSource::kMonteCarlo:
      return "montecarlo";
  }
  return "unknown";
}

double ExactMeanStar(const graph::GnpParams& params, unsigned m) {
  params.Validate();
  CheckStarOrder(params, m);
  return ScaledProduct(params.n * Binomial(params.n - 1, m), params.p, m, 1.0);
}

double ExactCovStar(const graph::GnpParams& params, unsigned m, unsigned l) {
  params.Validate();
  CheckStarOrder(params, m);
  CheckStarOrder(params, l);
  return StarCov(params, m, l);
}

double ExactMeanZagreb(const graph::GnpParams& params, unsigned k) {
  params.Validate();
  CheckIndexOrder(k);
  CompensatedSum acc;
  for (unsigned m = 1; m <= k && m + 1 <= params.n; ++m) {
    acc.Add(ScaledProduct(Stirling2(k, m) * FallingFactorial(params.n, m + 1),
                          params.p, m, 1.0));
  }
  return acc.Value();
}

double ExactVarZagreb(const graph::GnpParams& params, unsigned k) {
  params.Validate();
  CheckIndexOrder(k);
  CompensatedSum acc;
  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned l = 1; l <= k; ++l) {
      const ExactInt weight = Factorial(m) * Factorial(l) * Stirling2(k, m) *
                              Stirling2(k, l);
      AddStarCovTerms(params, m, l, weight, acc);
    }
  }
  return acc.Value();
}

MomentReport ExactStarMoments(const graph::GnpParams& params, unsigned k) {
  params.Validate();
  CheckIndexOrder(k);
  MomentReport r =
      MakeReport(params, k, MomentSource::kExactFormula, Labels('S', 2, k));
  for (unsigned m = 1; m <= k; ++m) {
    if (m + 1 <= params.n) r.mean(m - 1) = ExactMeanStar(params, m);
    for (unsigned l = 1; l <= m; ++l) {
      const double c = StarCov(params, m, l);
      r.cov(m - 1, l - 1) = c;
      r.cov(l - 1, m - 1) = c;
    }
  }
  return r;
}

MomentReport ExactZagrebMoments(const graph::GnpParams& params, unsigned k) {
  const MomentReport stars = ExactStarMoments(params, k);
  MomentReport r =
      MakeReport(params, k, MomentSource::kExactFormula, Labels('Z', 1, k));
  for (unsigned m = 1; m <= k; ++m) r.mean(m - 1) = ExactMeanZagreb(params, m);
  const Eigen::MatrixXd a = TransformAsDouble(k);
  r.cov = a * stars.cov * a.transpose();
  r.cov = 0.5 * (r.cov + r.cov.transpose()).eval();
  return r;
}

double AsympMeanStar(const graph::GnpParams& params, unsigned m) {
  params.Validate();
  CheckIndexOrder(m);
  const double n = static_cast<double>(params.n);
  return n * IntPow(n * params.p, m) / ToDouble(Factorial(m));
}

double AsympCovStar(const graph::GnpParams& params, unsigned m, unsigned l) {
  params.Validate();
  CheckIndexOrder(m);
  CheckIndexOrder(l);
  const double n = static_cast<double>(params.n);
  const double np = n * params.p;
  CompensatedSum acc;
  acc.Add(IntPow(np, m + l - 1) * OneMinus(params.p) /
          ToDouble(Factorial(m - 1) * Factorial(l - 1)));
  for (unsigned s = 1; s <= std::min(m, l); ++s) {
    acc.Add(IntPow(np, m + l - s) * OneMinusPow(params.p, s) /
            ToDouble(Factorial(s) * Factorial(m - s) * Factorial(l - s)));
  }
  return n * acc.Value();
}

double AsympMeanZagreb(const graph::GnpParams& params, unsigned k) {
  params.Validate();
  CheckIndexOrder(k);
  const double n = static_cast<double>(params.n);
  CompensatedSum acc;
  for (unsigned m = 1; m <= k; ++m) {
    acc.Add(ToDouble(Stirling2(k, m)) * IntPow(n * params.p, m));
  }
  return n * acc.Value();
}

double AsympCovZagreb(const graph::GnpParams& params, unsigned m, unsigned l) {
  params.Validate();
  CheckIndexOrder(m);
  CheckIndexOrder(l);
  const double n = static_cast<double>(params.n);
  const double np = n * params.p;
  CompensatedSum acc;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = 1; j <= l; ++j) {
      const double weight = ToDouble(Stirling2(m, i) * Stirling2(l, j));
      acc.Add(weight * i * j * IntPow(np, i + j - 1) * OneMinus(params.p));
      for (unsigned s = 1; s <= std::min(i, j); ++s) {
        const ExactInt ratio = Factorial(i) * Factorial(j) /
                               (Factorial(s) * Factorial(i - s) *
                                Factorial(j - s));
        acc.Add(weight * ToDouble(ratio) * IntPow(np, i + j - s) *
                OneMinusPow(params.p, s));
      }
    }
  }
  return n * acc.Value();
}

double AsympVarZagreb(const graph::GnpParams& params, unsigned k) {
  return AsympCovZagreb(params, k, k);
}

MomentReport AsymptoticZagrebMoments(const graph::GnpParams& params,
                                     unsigned k) {
  CheckIndexOrder(k);
  MomentReport r =
      MakeReport(params, k, MomentSource::kAsymptotic, Labels('Z', 1, k));
  for (unsigned m = 1; m <= k; ++m) {
    r.mean(m - 1) = AsympMeanZagreb(params, m);
    for (unsigned l = 1; l <= m; ++l) {
      const double c = AsympCovZagreb(params, m, l);
      r.cov(m - 1, l - 1) = c;
      r.cov(l - 1, m - 1) = c;
    }
  }
  return r;
}

MomentReport AsymptoticStarMoments(const graph::GnpParams& params, unsigned k) {
  CheckIndexOrder(k);
  MomentReport r =
      MakeReport(params, k, MomentSource::kAsymptotic, Labels('S', 2, k));
  for (unsigned m = 1; m <= k; ++m) {
    r.mean(m - 1) = AsympMeanStar(params, m);
    for (unsigned l = 1; l <= m; ++l) {
      const double c = AsympCovStar(params, m, l);
      r.cov(m - 1, l - 1) = c;
      r.cov(l - 1, m - 1) = c;
    }
  }
  return r;
}

OracleReport EnumerateOracle(const graph::GnpParams& params, unsigned k) {
  params.Validate();
  CheckIndexOrder(k);
  const std::uint64_t n = params.n;
  if (n > kMaxEnumerationVertices) {
    Fail(ErrorCode::kSizeGuard, "enumeration oracle supports n <= " +
                                    std::to_string(kMaxEnumerationVertices));
  }
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const unsigned num_slots = static_cast<unsigned>(slots.size());

  std::vector<double> weight(num_slots + 1);
  for (unsigned e = 0; e <= num_slots; ++e) {
    weight[e] = IntPow(params.p, e) * IntPow(1.0 - params.p, num_slots - e);
  }
  // power[d][m] = d^(m+1), choose[d][m] = C(d, m+1); both exact in double.
  std::vector<std::vector<double>> power(n, std::vector<double>(k));
  std::vector<std::vector<double>> choose(n, std::vector<double>(k));
  for (unsigned d = 0; d < n; ++d) {
    for (unsigned m = 0; m < k; ++m) {
      power[d][m] = IntPow(d, m + 1);
      choose[d][m] = ToDouble(Binomial(d, m + 1));
    }
  }

  const unsigned width = 2 * k;
  std::vector<double> values(width);
  std::array<unsigned, kMaxEnumerationVertices> degree{};
  const std::uint64_t masks = std::uint64_t{1} << num_slots;
  const auto evaluate = [&](std::uint64_t mask) {
    degree.fill(0);
    unsigned edges = 0;
    for (unsigned b = 0; b < num_slots; ++b) {
      if (mask >> b & 1U) {
        ++degree[slots[b].first];
        ++degree[slots[b].second];
        ++edges;
      }
    }
    std::fill(values.begin(), values.end(), 0.0);
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned m = 0; m < k; ++m) {
        values[m] += power[degree[v]][m];
        values[k + m] += choose[degree[v]][m];
      }
    }
    return weight[edges];
  };

  CompensatedSum total;
  std::vector<CompensatedSum> first(width);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const double w = evaluate(mask);
    total.Add(w);
    for (unsigned c = 0; c < width; ++c) first[c].Add(w * values[c]);
  }
  std::vector<double> mean(width);
  for (unsigned c = 0; c < width; ++c) mean[c] = first[c].Value();

  std::vector<CompensatedSum> second(width * width);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const double w = evaluate(mask);
    for (unsigned a = 0; a < width; ++a) {
      const double da = values[a] - mean[a];
      for (unsigned b = 0; b <= a; ++b) {
        second[a * width + b].Add(w * da * (values[b] - mean[b]));
      }
    }
  }

  OracleReport out;
  out.total_probability = total.Value();
  out.zagreb =
      MakeReport(params, k, MomentSource::kEnumeration, Labels('Z', 1, k));
  out.stars =
      MakeReport(params, k, MomentSource::kEnumeration, Labels('S', 2, k));
  for (unsigned a = 0; a < width; ++a) {
    MomentReport& ra = a < k ? out.zagreb : out.stars;
    ra.mean(a % k) = mean[a];
    for (unsigned b = 0; b <= a; ++b) {
      if ((a < k) != (b < k)) continue;
      const double c = second[a * width + b].Value();
      ra.cov(a % k, b % k) = c;
      ra.cov(b % k, a % k) = c;
    }
  }
  return out;
}

}  // namespace zagreb::moments

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

// First and second moments of star counts and generalized Zagreb indices
// of G(n, p): exact finite-n formulas, leading-order asymptotics, and a
// brute-force enumeration oracle over all labeled graphs.
//
// Throughout, "star order" m refers to S_{m+1}, the number of stars with m
// leaves, and "index order" k to Z^(k).

#ifndef ZAGREB_MOMENTS_H_
#define ZAGREB_MOMENTS_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "graph.h"

namespace zagreb::moments {

enum class MomentSource { kExactFormula, kAsymptotic, kEnumeration, kMonteCarlo };

std::string_view SourceName(MomentSource source);

struct MomentReport {
  unsigned k = 0;
  std::vector<std::string> labels;
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  MomentSource source = MomentSource::kExactFormula;
  graph::GnpParams params;
};

// E[S_{m+1}] = n C(n-1, m) p^m. Requires 1 <= m <= n - 1.
double ExactMeanStar(const graph::GnpParams& params, unsigned m);

// Cov(S_{m+1}, S_{l+1}). Requires 1 <= m, l <= n - 1.
double ExactCovStar(const graph::GnpParams& params, unsigned m, unsigned l);

// E[Z^(k)] = sum_m {k m} n!/(n-m-1)! p^m; terms with m + 1 > n vanish.
double ExactMeanZagreb(const graph::GnpParams& params, unsigned k);

// Var[Z^(k)] assembled term by term, each term an exact integer
// coefficient times p^a (1 - p^s).
double ExactVarZagreb(const graph::GnpParams& params, unsigned k);

// Means of Z^(1..k) and Cov(Z) = A_k Cov(S) A_k^T.
MomentReport ExactZagrebMoments(const graph::GnpParams& params, unsigned k);

// Means and covariance of (S_2, ..., S_{k+1}); orders beyond n - 1 are
// identically zero.
MomentReport ExactStarMoments(const graph::GnpParams& params, unsigned k);

// Leading-order forms with the (1 + O(1/n)) factor dropped.
double AsympMeanZagreb(const graph::GnpParams& params, unsigned k);
double AsympVarZagreb(const graph::GnpParams& params, unsigned k);
double AsympCovZagreb(const graph::GnpParams& params, unsigned m, unsigned l);
double AsympMeanStar(const graph::GnpParams& params, unsigned m);
double AsympCovStar(const graph::GnpParams& params, unsigned m, unsigned l);

MomentReport AsymptoticZagrebMoments(const graph::GnpParams& params,
                                     unsigned k);
MomentReport AsymptoticStarMoments(const graph::GnpParams& params, unsigned k);

inline constexpr std::uint64_t kMaxEnumerationVertices = 7;

struct OracleReport {
  MomentReport zagreb;
  MomentReport stars;
  double total_probability = 0.0;
};

// Sums over all 2^C(n,2) labeled graphs (edge slots as bitmask bits in the
// sampler's row-major order), weighting each by p^e (1-p)^(C(n,2)-e).
// Throws kSizeGuard for n > 7.
OracleReport EnumerateOracle(const graph::GnpParams& params, unsigned k);

}  // namespace zagreb::moments

#endif  // ZAGREB_MOMENTS_H_

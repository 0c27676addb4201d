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

// Limit-law regimes of Z^(k) under a p(n) law, the limiting covariance
// matrices of the Gaussian regimes, and the centering/scaling that goes
// with each.

#ifndef ZAGREB_REGIMES_H_
#define ZAGREB_REGIMES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "graph.h"
#include "plaw.h"

namespace zagreb::limits {

enum class Regime {
  kDegenerateZero,      // n^2 p -> 0
  kPoissonHalfLambda,   // n^2 p -> lambda
  kDegenerateComplete,  // n^2 (1-p) -> 0
  kPoissonComplement,   // n^2 (1-p) -> lambda
  kCltSparse,           // np -> 0, n^2 p -> inf
  kCltCritical,         // np -> c
  kCltDense,            // np -> inf, n^2 (1-p)^3 -> inf
  kCltSingle,           // np -> inf, n^2 (1-p) -> inf, n^2 (1-p)^3 bounded
};

enum class LimitLaw {
  kDegenerateZero,
  kPoissonHalfLambda,
  kWllnRatio,
  kDegenerateComplete,
  kPoissonComplement,
  kWllnComplementRatio,
  kCltSparse,
  kCltCritical,
  kCltDense,
  kCltSingle,
  kOpen,
};

std::string_view RegimeName(Regime regime);
std::string_view LimitLawName(LimitLaw law);

struct RegimeReport {
  PLaw law;
  unsigned k = 1;
  Regime regime = Regime::kCltDense;
  // lambda for the Poisson regimes, c for kCltCritical, empty otherwise.
  std::optional<double> parameter;
  LimitLaw limit_law = LimitLaw::kCltDense;
  std::string normalization;
  // n^2 p (1-p) -> inf: each single index is asymptotically normal.
  bool single_index_normal = false;
  // Joint normality of (Z^(1..k)) is unresolved (kCltSingle with k >= 2).
  bool joint_law_open = false;
  // Further limit statements that hold alongside the primary one.
  std::vector<LimitLaw> also_holds;
};

RegimeReport ClassifyRegime(const PLaw& law, unsigned k);

enum class CovKind { kSigmaStar, kSigma, kOnes, kMarginalIdentity };

std::string_view CovKindName(CovKind kind);

struct CovModel {
  unsigned k = 1;
  CovKind kind = CovKind::kOnes;
  double c = 0.0;  // kSigmaStar / kSigma only
  Eigen::MatrixXd matrix;
};

// Limiting covariance of (S_2, ..., S_{k+1}) / sqrt(n) when np -> c.
CovModel SigmaStar(double c, unsigned k);

// 2 c^(k(k+1)/2) / prod_{m<=k} m!. Underflows to 0 for very large k.
double SigmaStarDet(double c, unsigned k);

// Limiting covariance of (Z^(1), ..., Z^(k)) / sqrt(n) when np -> c.
CovModel SigmaZagreb(double c, unsigned k);

CovModel OnesMatrix(unsigned k);

struct Normalizer {
  unsigned order = 1;  // index order m of Z^(m)
  double center = 0.0;
  double scale = 1.0;
};

struct Standardization {
  std::vector<Normalizer> norms;
  CovModel target;
};

// Centering and scaling of Z^(1..k) prescribed for the regime's Gaussian
// limit, evaluated at (n, p). Throws kRegime for non-Gaussian regimes.
//
// kCltCritical: exact mean, sqrt(n), target Sigma_k(c).
// kCltDense:    exact mean, m (np)^m sqrt(2(1-p)/p), target all-ones.
// kCltSparse:   sum_j {m j} n^(j+1) p^j, sqrt(2 n^2 p), target all-ones.
// kCltSingle:   exact mean, sqrt of the leading-order variance; only the
//               marginals have a known limit (kMarginalIdentity).
Standardization Standardizer(const RegimeReport& regime,
                             const graph::GnpParams& params, unsigned k);

// Single-index normalisation valid whenever n^2 p (1-p) -> inf.
Normalizer SingleIndexNormalizer(const graph::GnpParams& params, unsigned m);

}  // namespace zagreb::limits

#endif  // ZAGREB_REGIMES_H_

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

#include <cmath>
#include <cstdint>

#include "combinatorics.h"
#include "error.h"
#include "graph.h"
#include "gtest/gtest.h"

namespace zagreb::moments {
namespace {

using graph::GnpParams;

double Rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

TEST(ExactMomentsTest, ThreeVerticesHalf) {
  const GnpParams params{3, 0.5};
  EXPECT_DOUBLE_EQ(ExactMeanZagreb(params, 1), 3.0);
  EXPECT_DOUBLE_EQ(ExactMeanZagreb(params, 2), 4.5);
  EXPECT_DOUBLE_EQ(ExactVarZagreb(params, 1), 3.0);
  EXPECT_DOUBLE_EQ(ExactVarZagreb(params, 2), 12.75);
  EXPECT_DOUBLE_EQ(ExactCovStar(params, 1, 2), 1.5);
  const MomentReport r = ExactZagrebMoments(params, 2);
  EXPECT_EQ(r.labels, (std::vector<std::string>{"Z1", "Z2"}));
  EXPECT_EQ(r.source, MomentSource::kExactFormula);
  EXPECT_DOUBLE_EQ(r.mean(1), 4.5);
  EXPECT_NEAR(r.cov(1, 1), 12.75, 1e-12);
}

TEST(ExactMomentsTest, MeanStarFormula) {
  // n C(n-1, m) p^m.
  const GnpParams params{10, 0.2};
  EXPECT_NEAR(ExactMeanStar(params, 1), 10 * 9 * 0.2, 1e-12);
  EXPECT_NEAR(ExactMeanStar(params, 3), 10 * 84 * 0.008, 1e-12);
  EXPECT_THROW(ExactMeanStar(params, 0), Error);
  EXPECT_THROW(ExactMeanStar(params, 10), Error);
}

TEST(ExactMomentsTest, EdgeCountVariance) {
  // S2 = 2|E|, |E| ~ Bin(C(n,2), p).
  for (std::uint64_t n : {2u, 5u, 40u}) {
    for (double p : {0.1, 0.5, 0.9}) {
      const double var = 4.0 * n * (n - 1) / 2.0 * p * (1 - p);
      EXPECT_NEAR(ExactCovStar({n, p}, 1, 1), var, 1e-9 * var);
      EXPECT_NEAR(ExactVarZagreb({n, p}, 1), var, 1e-9 * var);
    }
  }
}

TEST(ExactMomentsTest, TwoVertices) {
  // Z^(k) = 2 * Bernoulli(p) for every k.
  for (unsigned k = 1; k <= 5; ++k) {
    EXPECT_NEAR(ExactMeanZagreb({2, 0.3}, k), 0.6, 1e-15);
    EXPECT_NEAR(ExactVarZagreb({2, 0.3}, k), 4 * 0.3 * 0.7, 1e-15);
  }
}

TEST(ExactMomentsTest, SingleVertexIsZero) {
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(ExactMeanZagreb({1, 0.5}, k), 0.0);
    EXPECT_EQ(ExactVarZagreb({1, 0.5}, k), 0.0);
  }
  const MomentReport s = ExactStarMoments({1, 0.5}, 3);
  EXPECT_TRUE(s.mean.isZero());
  EXPECT_TRUE(s.cov.isZero());
}

TEST(ExactMomentsTest, CovarianceIsSymmetric) {
  const GnpParams params{12, 0.35};
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned l = 1; l <= 6; ++l) {
      EXPECT_EQ(ExactCovStar(params, m, l), ExactCovStar(params, l, m));
    }
  }
}

TEST(ExactMomentsTest, VarianceMatchesCovarianceMatrix) {
  for (double p : {0.01, 0.3, 0.99}) {
    const GnpParams params{50, p};
    const MomentReport r = ExactZagrebMoments(params, 5);
    for (unsigned m = 1; m <= 5; ++m) {
      EXPECT_LT(Rel(r.cov(m - 1, m - 1), ExactVarZagreb(params, m)), 1e-9);
      EXPECT_LT(Rel(r.mean(m - 1), ExactMeanZagreb(params, m)), 1e-12);
    }
  }
}

TEST(ExactMomentsTest, ExtremeParametersStayFinite) {
  const GnpParams tiny{100000, 1e-12};
  EXPECT_GT(ExactVarZagreb(tiny, 8), 0.0);
  EXPECT_TRUE(std::isfinite(ExactVarZagreb(tiny, 8)));
  const GnpParams near_one{2000, 1.0 - 1e-9};
  EXPECT_GT(ExactVarZagreb(near_one, 3), 0.0);
  EXPECT_TRUE(std::isfinite(ExactMeanZagreb({100000, 0.5}, 20)));
}

TEST(OracleTest, MatchesExactFormulas) {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      const GnpParams params{n, p};
      const OracleReport o = EnumerateOracle(params, 4);
      EXPECT_NEAR(o.total_probability, 1.0, 1e-12);
      const MomentReport z = ExactZagrebMoments(params, 4);
      const MomentReport s = ExactStarMoments(params, 4);
      for (int i = 0; i < 4; ++i) {
        EXPECT_LT(Rel(z.mean(i), o.zagreb.mean(i)), 1e-9);
        EXPECT_LT(Rel(s.mean(i), o.stars.mean(i)), 1e-9);
        for (int j = 0; j < 4; ++j) {
          EXPECT_LT(Rel(z.cov(i, j), o.zagreb.cov(i, j)), 1e-9)
              << n << " " << p << " " << i << " " << j;
          EXPECT_LT(Rel(s.cov(i, j), o.stars.cov(i, j)), 1e-9);
        }
      }
      EXPECT_EQ(o.zagreb.source, MomentSource::kEnumeration);
    }
  }
}

TEST(OracleTest, SizeGuard) {
  try {
    EnumerateOracle({8, 0.5}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
  EXPECT_NO_THROW(EnumerateOracle({7, 0.5}, 1));
}

TEST(AsymptoticTest, LowOrderClosedForms) {
  const GnpParams params{100, 0.5};
  const double n = 100, p = 0.5;
  EXPECT_DOUBLE_EQ(AsympMeanZagreb(params, 1), 5000.0);
  EXPECT_NEAR(AsympMeanZagreb(params, 2), n * n * p * (n * p + 1), 1e-9);
  EXPECT_NEAR(AsympMeanZagreb(params, 3),
              n * n * p * (n * n * p * p + 3 * n * p + 1), 1e-6);
  EXPECT_NEAR(AsympVarZagreb(params, 1), 2 * n * n * p * (1 - p), 1e-9);
}

// The displayed k = 2, 3 variance polynomials carry only the leading terms
// of the double sum, so compare them as ratios.
TEST(AsymptoticTest, DisplayedVariancePolynomials) {
  for (double n : {1e3, 1e4, 1e5}) {
    for (double p : {0.3, 2.0 / n}) {
      const GnpParams params{static_cast<std::uint64_t>(n), p};
      const double x = n * p;
      const double v2 = 2 * n * n * p * (1 - p) * (4 * x * x + 5 * x + 1);
      const double v3 = 2 * n * n * p * (1 - p) *
                        (9 * x * x * x * x + 45 * x * x * x + 63 * x * x +
                         21 * x + 1);
      EXPECT_LT(Rel(AsympVarZagreb(params, 2), v2), 10.0 / n);
      EXPECT_LT(Rel(AsympVarZagreb(params, 3), v3), 10.0 / n);
    }
  }
}

TEST(AsymptoticTest, ConvergesToExact) {
  for (unsigned k = 1; k <= 4; ++k) {
    double previous = 1.0;
    for (std::uint64_t n : {100u, 1000u, 10000u}) {
      for (double p : {0.3, 2.0 / n}) {
        const GnpParams params{n, p};
        const double mean_err =
            Rel(AsympMeanZagreb(params, k), ExactMeanZagreb(params, k));
        const double var_err =
            Rel(AsympVarZagreb(params, k), ExactVarZagreb(params, k));
        EXPECT_LT(mean_err, 20.0 * k * k / n) << k << " " << n << " " << p;
        EXPECT_LT(var_err, 20.0 * k * k / n) << k << " " << n << " " << p;
      }
      const double err = Rel(AsympVarZagreb({n, 0.3}, k),
                             ExactVarZagreb({n, 0.3}, k));
      EXPECT_LE(err, previous);
      previous = err;
    }
  }
}

TEST(AsymptoticTest, StarMomentsAndReports) {
  const GnpParams params{2000, 0.001};
  for (unsigned m = 1; m <= 3; ++m) {
    EXPECT_LT(Rel(AsympMeanStar(params, m), ExactMeanStar(params, m)), 0.01);
    for (unsigned l = 1; l <= 3; ++l) {
      EXPECT_LT(Rel(AsympCovStar(params, m, l), ExactCovStar(params, m, l)),
                0.01);
    }
  }
  EXPECT_THROW(AsympMeanStar(params, 0), Error);
  const MomentReport r = AsymptoticZagrebMoments(params, 3);
  EXPECT_EQ(r.source, MomentSource::kAsymptotic);
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned l = 1; l <= 3; ++l) {
      EXPECT_DOUBLE_EQ(r.cov(m - 1, l - 1), AsympCovZagreb(params, m, l));
    }
  }
  EXPECT_EQ(AsymptoticStarMoments(params, 2).labels,
            (std::vector<std::string>{"S2", "S3"}));
}

TEST(MomentSourceTest, Names) {
  EXPECT_EQ(SourceName(MomentSource::kExactFormula), "exact");
  EXPECT_EQ(SourceName(MomentSource::kAsymptotic), "asymptotic");
  EXPECT_EQ(SourceName(MomentSource::kEnumeration), "enumeration");
  EXPECT_EQ(SourceName(MomentSource::kMonteCarlo), "montecarlo");
}

}  // namespace
}  // namespace zagreb::moments

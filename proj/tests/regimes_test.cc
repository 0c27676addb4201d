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

#include "regimes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "combinatorics.h"
#include "error.h"
#include "gtest/gtest.h"
#include "indices.h"
#include "moments.h"
#include "plaw.h"
#include "verify.h"

namespace zagreb::limits {
namespace {

double Rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

long ParseColumn(const std::string& text) {
  try {
    ParsePLaw(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -2;
}

TEST(PLawParseTest, Examples) {
  EXPECT_EQ(ParsePLaw("0.5"), MakePLaw(PLawForm::kConst, 0.5));
  EXPECT_EQ(ParsePLaw("2*n^-1"), MakePLaw(PLawForm::kPowerLow, 2, 1));
  EXPECT_EQ(ParsePLaw("1-3*n^-2"), MakePLaw(PLawForm::kPowerHigh, 3, 2));
  EXPECT_EQ(ParsePLaw("  1 - 3 * n ^ - 2 "), ParsePLaw("1-3*n^-2"));
  try {
    ParsePLaw("1.5");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
}

TEST(PLawParseTest, ErrorColumns) {
  EXPECT_EQ(ParseColumn(""), 0);
  EXPECT_EQ(ParseColumn("x"), 0);
  EXPECT_EQ(ParseColumn("2*n^"), 4);
  EXPECT_EQ(ParseColumn("2*n^-"), 5);
  EXPECT_EQ(ParseColumn("2*m^-1"), 2);
  EXPECT_EQ(ParseColumn("2.*n^-1"), 2);
  EXPECT_EQ(ParseColumn("3-2*n^-1"), 0);
  EXPECT_EQ(ParseColumn("1-0.5"), 5);
  EXPECT_EQ(ParseColumn("0.5 0.5"), 4);
  EXPECT_EQ(ParseColumn("2*n^-1 x"), 7);
  EXPECT_EQ(ParseColumn("-0.5"), 0);
  EXPECT_EQ(ParseColumn("1e-3"), 1);
}

TEST(PLawParseTest, DomainErrors) {
  for (const char* bad : {"0", "1", "0*n^-1", "2*n^-0", "1-0*n^-2"}) {
    try {
      ParsePLaw(bad);
      FAIL() << bad;
    } catch (const ParseError&) {
      FAIL() << bad << " should be a domain error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDomain) << bad;
    }
  }
}

TEST(PLawTest, EvaluateAndThreshold) {
  const PLaw a = ParsePLaw("1*n^-1");
  EXPECT_DOUBLE_EQ(a.Evaluate(2000), 5e-4);
  EXPECT_EQ(a.n0, 2u);
  const PLaw b = ParsePLaw("1-2*n^-1");
  EXPECT_DOUBLE_EQ(b.Evaluate(300), 1.0 - 2.0 / 300);
  EXPECT_EQ(b.n0, 3u);
  EXPECT_EQ(ParsePLaw("0.3").n0, 1u);
  const PLaw c = ParsePLaw("50*n^-0.5");
  EXPECT_EQ(c.n0, 2501u);
  EXPECT_GT(c.Evaluate(c.n0), 0.0);
  EXPECT_LT(c.Evaluate(c.n0), 1.0);
  EXPECT_GE(c.Evaluate(c.n0 - 1), 1.0);
}

TEST(PLawTest, FormatRoundTrip) {
  for (const char* text :
       {"0.5", "0.001", "2*n^-1", "1-3*n^-2", "0.123456789*n^-1.25",
        "1-100*n^-2.5", "7*n^-0.6666666666666666", "0.9999999"}) {
    const PLaw law = ParsePLaw(text);
    EXPECT_EQ(FormatPLaw(law), text);
    EXPECT_EQ(ParsePLaw(FormatPLaw(law)), law);
  }
  for (double a : {1e-7, 0.1, 0.3, 1.0 / 3.0, 2.5, 1234.5678}) {
    for (double b : {0.25, 0.5, 1.0, 4.0 / 3.0, 2.0, 3.0}) {
      const PLaw law = MakePLaw(PLawForm::kPowerLow, a, b);
      EXPECT_EQ(ParsePLaw(FormatPLaw(law)), law);
    }
  }
}

TEST(ClassifyRegimeTest, Fixtures) {
  for (const auto& f : verify::RegimeFixtures()) {
    const RegimeReport r = ClassifyRegime(ParsePLaw(f.law), f.k);
    EXPECT_EQ(RegimeName(r.regime), f.regime) << f.law;
    if (std::isnan(f.parameter)) {
      EXPECT_FALSE(r.parameter.has_value()) << f.law;
    } else {
      ASSERT_TRUE(r.parameter.has_value()) << f.law;
      EXPECT_EQ(*r.parameter, f.parameter) << f.law;
    }
    EXPECT_EQ(r.joint_law_open, f.joint_open) << f.law;
  }
}

TEST(ClassifyRegimeTest, LimitLawsAndAnnotations) {
  const RegimeReport poisson = ClassifyRegime(ParsePLaw("2*n^-2"), 3);
  EXPECT_EQ(poisson.limit_law, LimitLaw::kPoissonHalfLambda);
  EXPECT_FALSE(poisson.single_index_normal);

  const RegimeReport critical = ClassifyRegime(ParsePLaw("1*n^-1"), 3);
  EXPECT_EQ(LimitLawName(critical.limit_law), "CLT-Critical(Sigma_k)");
  EXPECT_TRUE(critical.single_index_normal);

  const RegimeReport single = ClassifyRegime(ParsePLaw("1-2*n^-1"), 2);
  EXPECT_EQ(single.limit_law, LimitLaw::kCltSingle);
  EXPECT_TRUE(single.single_index_normal);
  EXPECT_NE(std::find(single.also_holds.begin(), single.also_holds.end(),
                      LimitLaw::kOpen),
            single.also_holds.end());

  const RegimeReport dense = ClassifyRegime(ParsePLaw("0.5"), 2);
  EXPECT_EQ(dense.regime, Regime::kCltDense);
  EXPECT_FALSE(dense.joint_law_open);

  EXPECT_THROW(ClassifyRegime(ParsePLaw("0.5"), 0), Error);
}

// Independent restatement of the case split, used to cross-check the
// classifier over a grid of monomial laws.
Regime ExpectedRegime(const PLaw& law) {
  const double b = law.b;
  switch (law.form) {
    case PLawForm::kConst:
      return Regime::kCltDense;
    case PLawForm::kPowerLow:
      if (b > 2) return Regime::kDegenerateZero;
      if (b == 2) return Regime::kPoissonHalfLambda;
      if (b > 1) return Regime::kCltSparse;
      if (b == 1) return Regime::kCltCritical;
      return Regime::kCltDense;
    case PLawForm::kPowerHigh:
      if (b > 2) return Regime::kDegenerateComplete;
      if (b == 2) return Regime::kPoissonComplement;
      if (3 * b < 2) return Regime::kCltDense;
      return Regime::kCltSingle;
  }
  return Regime::kCltDense;
}

TEST(ClassifyRegimeTest, TotalAndExclusiveOverGrid) {
  for (double a : {0.25, 1.0, 3.0}) {
    for (int twelfths = 1; twelfths <= 40; ++twelfths) {
      const double b = twelfths / 12.0;
      for (PLawForm form : {PLawForm::kPowerLow, PLawForm::kPowerHigh}) {
        const PLaw law = MakePLaw(form, a, b);
        const RegimeReport r = ClassifyRegime(law, 2);
        EXPECT_EQ(r.regime, ExpectedRegime(law)) << FormatPLaw(law);
        const bool needs_parameter = r.regime == Regime::kPoissonHalfLambda ||
                                     r.regime == Regime::kPoissonComplement ||
                                     r.regime == Regime::kCltCritical;
        EXPECT_EQ(r.parameter.has_value(), needs_parameter);
        if (needs_parameter) {
          EXPECT_EQ(*r.parameter, a);
        }
      }
    }
  }
  for (double a : {0.01, 0.5, 0.99}) {
    EXPECT_EQ(ClassifyRegime(MakePLaw(PLawForm::kConst, a), 4).regime,
              Regime::kCltDense);
  }
}

TEST(SigmaStarTest, Entries) {
  for (double c : {0.5, 1.0, 2.0}) {
    EXPECT_DOUBLE_EQ(SigmaStar(c, 1).matrix(0, 0), 2 * c);
    const Eigen::MatrixXd s = SigmaStar(c, 2).matrix;
    EXPECT_DOUBLE_EQ(s(0, 1), 2 * c * c);
    EXPECT_DOUBLE_EQ(s(1, 0), 2 * c * c);
    EXPECT_DOUBLE_EQ(s(1, 1), 2 * c * c * c + c * c / 2);
  }
  EXPECT_EQ(SigmaStar(1.0, 3).kind, CovKind::kSigmaStar);
  EXPECT_THROW(SigmaStar(0.0, 2), Error);
  EXPECT_THROW(SigmaStar(1.0, 0), Error);
}

TEST(SigmaStarTest, DeterminantClosedForm) {
  EXPECT_DOUBLE_EQ(SigmaStarDet(1.0, 1), 2.0);
  EXPECT_DOUBLE_EQ(SigmaStarDet(1.0, 2), 1.0);
  EXPECT_NEAR(SigmaStarDet(2.0, 3), 32.0 / 3.0, 1e-12);
  for (double c : {0.5, 1.0, 2.0}) {
    for (unsigned k = 1; k <= 8; ++k) {
      const double lu = SigmaStar(c, k).matrix.partialPivLu().determinant();
      EXPECT_LT(Rel(SigmaStarDet(c, k), lu), 1e-9) << c << " " << k;
    }
  }
  // c^210 alone overflows a double; the determinant does not.
  double log_det = std::log(2.0) + 210 * std::log(100.0);
  for (int m = 1; m <= 20; ++m) log_det -= std::lgamma(m + 1.0);
  EXPECT_LT(Rel(std::log(SigmaStarDet(100.0, 20)), log_det), 1e-12);
}

TEST(SigmaStarTest, PositiveDefinite) {
  for (double c : {0.5, 1.0, 2.0}) {
    for (unsigned k = 1; k <= 8; ++k) {
      const Eigen::MatrixXd s = SigmaStar(c, k).matrix;
      EXPECT_TRUE(s.isApprox(s.transpose()));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
      EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0) << c << " " << k;
      EXPECT_EQ(s.llt().info(), Eigen::Success);
    }
  }
}

TEST(SigmaZagrebTest, ThreeByThreeDisplay) {
  Eigen::MatrixXd expected(3, 3);
  expected << 1, 3, 10, 3, 10, 36, 10, 36, 139;
  EXPECT_TRUE(SigmaZagreb(1.0, 3).matrix.isApprox(2 * expected, 1e-14));
  for (double c : {0.5, 2.0, 3.0}) {
    Eigen::MatrixXd m(3, 3);
    const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
    const double a12 = 2 * c + 1, a13 = 3 * c2 + 6 * c + 1;
    const double a22 = 4 * c2 + 5 * c + 1;
    const double a23 = 6 * c3 + 18 * c2 + 11 * c + 1;
    const double a33 = 9 * c4 + 45 * c3 + 63 * c2 + 21 * c + 1;
    m << 1, a12, a13, a12, a22, a23, a13, a23, a33;
    EXPECT_TRUE(SigmaZagreb(c, 3).matrix.isApprox(2 * c * m, 1e-13)) << c;
  }
  EXPECT_DOUBLE_EQ(SigmaZagreb(0.7, 1).matrix(0, 0), 1.4);
}

TEST(SigmaZagrebTest, EqualsTransformedSigmaStar) {
  for (double c : {0.5, 1.0, 2.0}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const auto t = indices::Transform(k);
      Eigen::MatrixXd a(k, k);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) a(i, j) = ToDouble(t.entries[i][j]);
      }
      const Eigen::MatrixXd expected =
          a * SigmaStar(c, k).matrix * a.transpose();
      const Eigen::MatrixXd actual = SigmaZagreb(c, k).matrix;
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) {
          EXPECT_LT(Rel(actual(i, j), expected(i, j)), 1e-9);
        }
      }
    }
  }
}

TEST(SigmaZagrebTest, LimitOfScaledExactCovariance) {
  // n Sigma_k(c) is the large-n covariance of Z at p = c/n.
  const double c = 1.5;
  const std::uint64_t n = 200000;
  const auto exact = moments::ExactZagrebMoments({n, c / n}, 3);
  const Eigen::MatrixXd target = SigmaZagreb(c, 3).matrix;
  EXPECT_LT((exact.cov / n - target).norm() / target.norm(), 1e-3);
}

TEST(OnesMatrixTest, RankOne) {
  EXPECT_EQ(OnesMatrix(1).matrix, Eigen::MatrixXd::Ones(1, 1));
  const Eigen::MatrixXd u = OnesMatrix(3).matrix;
  EXPECT_EQ(u.fullPivLu().rank(), 1);
  EXPECT_TRUE((u * u).isApprox(3 * u));
  EXPECT_EQ(OnesMatrix(3).kind, CovKind::kOnes);
}

TEST(StandardizerTest, Critical) {
  const RegimeReport r = ClassifyRegime(ParsePLaw("1*n^-1"), 3);
  const graph::GnpParams params{2000, 1.0 / 2000};
  const Standardization st = Standardizer(r, params, 3);
  ASSERT_EQ(st.norms.size(), 3u);
  for (unsigned m = 1; m <= 3; ++m) {
    EXPECT_EQ(st.norms[m - 1].center, moments::ExactMeanZagreb(params, m));
    EXPECT_DOUBLE_EQ(st.norms[m - 1].scale, std::sqrt(2000.0));
  }
  EXPECT_EQ(st.target.kind, CovKind::kSigma);
  EXPECT_TRUE(st.target.matrix.isApprox(SigmaZagreb(1.0, 3).matrix));
}

TEST(StandardizerTest, Dense) {
  const RegimeReport r = ClassifyRegime(ParsePLaw("0.5"), 1);
  const Standardization st = Standardizer(r, {1000, 0.5}, 1);
  EXPECT_NEAR(st.norms[0].scale, 500 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(st.norms[0].scale, 707.1, 0.05);
  EXPECT_EQ(st.target.kind, CovKind::kOnes);
  const Standardization st3 = Standardizer(r, {100, 0.2}, 3);
  EXPECT_NEAR(st3.norms[2].scale, 3 * 8000.0 * std::sqrt(8.0), 1e-6);
}

TEST(StandardizerTest, Sparse) {
  const RegimeReport r = ClassifyRegime(ParsePLaw("1*n^-1.5"), 2);
  const double n = 10000, p = std::pow(n, -1.5);
  const Standardization st = Standardizer(r, {10000, p}, 2);
  EXPECT_NEAR(st.norms[0].center, n * n * p, 1e-9);
  EXPECT_NEAR(st.norms[1].center, n * n * n * p * p + n * n * p, 1e-9);
  EXPECT_NEAR(st.norms[1].scale, std::sqrt(2 * n * n * p), 1e-12);
}

TEST(StandardizerTest, SingleIndex) {
  const RegimeReport r = ClassifyRegime(ParsePLaw("1-2*n^-1"), 2);
  const graph::GnpParams params{300, 1.0 - 2.0 / 300};
  const Standardization st = Standardizer(r, params, 2);
  const double n = 300, p = params.p;
  EXPECT_NEAR(st.norms[0].scale, std::sqrt(2 * n * n * p * (1 - p)), 1e-9);
  EXPECT_EQ(st.norms[1].center, moments::ExactMeanZagreb(params, 2));
  EXPECT_EQ(st.target.kind, CovKind::kMarginalIdentity);
  EXPECT_EQ(SingleIndexNormalizer(params, 1).scale, st.norms[0].scale);
}

TEST(StandardizerTest, RejectsNonGaussianRegimes) {
  for (const char* law : {"2*n^-2", "1*n^-3", "1-1*n^-3", "1-3*n^-2"}) {
    const RegimeReport r = ClassifyRegime(ParsePLaw(law), 2);
    try {
      Standardizer(r, {100, 0.5}, 2);
      FAIL() << law;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRegime);
    }
  }
}

}  // namespace
}  // namespace zagreb::limits

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

#include <cmath>

#include "combinatorics.h"
#include "error.h"
#include "moments.h"

namespace zagreb::limits {
namespace {

using combinatorics::Factorial;
using combinatorics::Stirling2;

// Limit of coef * n^exponent as n -> inf.
struct Limit {
  enum Kind { kZero, kFinite, kInfinite } kind;
  double value = 0.0;
};

Limit PowerLimit(double coef, double exponent) {
  if (exponent > 0.0) return {Limit::kInfinite};
  if (exponent < 0.0) return {Limit::kZero};
  return {Limit::kFinite, coef};
}

struct Asymptotics {
  Limit n2p;       // n^2 p
  Limit np;        // n p
  Limit n2q;       // n^2 (1-p)
  Limit n2q3;      // n^2 (1-p)^3
};

Asymptotics Analyze(const PLaw& law) {
  const Limit inf{Limit::kInfinite};
  switch (law.form) {
    case PLawForm::kConst:
      return {inf, inf, inf, inf};
    case PLawForm::kPowerLow:
      return {PowerLimit(law.a, 2.0 - law.b), PowerLimit(law.a, 1.0 - law.b),
              inf, inf};
    case PLawForm::kPowerHigh:
      return {inf, inf, PowerLimit(law.a, 2.0 - law.b),
              PowerLimit(law.a * law.a * law.a, 2.0 - 3.0 * law.b)};
  }
  return {inf, inf, inf, inf};
}

double IntPow(double base, unsigned exponent) {
  double result = 1.0;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

void CheckCovArgs(double c, unsigned k) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    Fail(ErrorCode::kDomain, "c must be positive");
  }
  if (k < 1 || k > combinatorics::kMaxOrder) {
    Fail(ErrorCode::kDomain, "matrix order must be in 1.." +
                                 std::to_string(combinatorics::kMaxOrder));
  }
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kDegenerateZero:
      return "DegenerateZero";
    case Regime::kPoissonHalfLambda:
      return "PoissonHalfLambda";
    case Regime::kDegenerateComplete:
      return "DegenerateComplete";
    case Regime::kPoissonComplement:
      return "PoissonComplement";
    case Regime::kCltSparse:
      return "CLT-Sparse";
    case Regime::kCltCritical:
      return "CLT-Critical";
    case Regime::kCltDense:
      return "CLT-Dense";
    case Regime::kCltSingle:
      return "CLT-Single";
  }
  return "unknown";
}

std::string_view LimitLawName(LimitLaw law) {
  switch (law) {
    case LimitLaw::kDegenerateZero:
      return "DegenerateZero";
    case LimitLaw::kPoissonHalfLambda:
      return "PoissonHalfLambda";
    case LimitLaw::kWllnRatio:
      return "WLLN-Ratio";
    case LimitLaw::kDegenerateComplete:
      return "DegenerateComplete";
    case LimitLaw::kPoissonComplement:
      return "PoissonComplement";
    case LimitLaw::kWllnComplementRatio:
      return "WLLN-ComplementRatio";
    case LimitLaw::kCltSparse:
      return "CLT-Sparse(S2-dominant)";
    case LimitLaw::kCltCritical:
      return "CLT-Critical(Sigma_k)";
    case LimitLaw::kCltDense:
      return "CLT-Dense(U_k)";
    case LimitLaw::kCltSingle:
      return "CLT-Single";
    case LimitLaw::kOpen:
      return "Open";
  }
  return "unknown";
}

std::string_view CovKindName(CovKind kind) {
  switch (kind) {
    case CovKind::kSigmaStar:
      return "SigmaStar";
    case CovKind::kSigma:
      return "Sigma";
    case CovKind::kOnes:
      return "Ones";
    case CovKind::kMarginalIdentity:
      return "MarginalIdentity";
  }
  return "unknown";
}

RegimeReport ClassifyRegime(const PLaw& law, unsigned k) {
  if (k < 1 || k > combinatorics::kMaxOrder) {
    Fail(ErrorCode::kDomain, "index order must be in 1.." +
                                 std::to_string(combinatorics::kMaxOrder));
  }
  const Asymptotics lim = Analyze(law);
  RegimeReport r;
  r.law = law;
  r.k = k;
  const auto set = [&](Regime regime, LimitLaw limit, std::string norm) {
    r.regime = regime;
    r.limit_law = limit;
    r.normalization = std::move(norm);
  };

  if (lim.n2p.kind == Limit::kZero) {
    set(Regime::kDegenerateZero, LimitLaw::kDegenerateZero,
        "Z^(k) -> 0 in probability; no centering or scaling");
  } else if (lim.n2p.kind == Limit::kFinite) {
    set(Regime::kPoissonHalfLambda, LimitLaw::kPoissonHalfLambda,
        "Z^(k)/2 -> Poisson(lambda/2)");
    r.parameter = lim.n2p.value;
  } else if (lim.n2q.kind == Limit::kZero) {
    set(Regime::kDegenerateComplete, LimitLaw::kDegenerateComplete,
        "P(Z^(k) = n(n-1)^k) -> 1");
  } else if (lim.n2q.kind == Limit::kFinite) {
    set(Regime::kPoissonComplement, LimitLaw::kPoissonComplement,
        "(n(n-1)^k - Z^(k)) / (2k n^(k-1)) -> Poisson(lambda/2)");
    r.parameter = lim.n2q.value;
  } else if (lim.np.kind == Limit::kZero) {
    set(Regime::kCltSparse, LimitLaw::kCltSparse,
        "(Z^(m) - sum_j {m j} n^(j+1) p^j) / sqrt(2 n^2 p) -> N(0, U_k)");
  } else if (lim.np.kind == Limit::kFinite) {
    set(Regime::kCltCritical, LimitLaw::kCltCritical,
        "(Z^(m) - E[Z^(m)]) / sqrt(n) -> N(0, Sigma_k(c))");
    r.parameter = lim.np.value;
  } else if (lim.n2q3.kind == Limit::kInfinite) {
    set(Regime::kCltDense, LimitLaw::kCltDense,
        "sqrt(p/(2(1-p))) (Z^(m) - E[Z^(m)]) / (m (np)^m) -> N(0, U_k)");
  } else {
    set(Regime::kCltSingle, LimitLaw::kCltSingle,
        "(Z^(m) - E[Z^(m)]) / sqrt(leading Var[Z^(m)]) -> N(0, 1) for each "
        "m; joint law of Z^(1..k) open");
    r.joint_law_open = true;
  }

  const bool dense_edges = lim.n2p.kind == Limit::kInfinite;
  const bool dense_non_edges = lim.n2q.kind == Limit::kInfinite;
  r.single_index_normal = dense_edges && dense_non_edges;
  if (dense_edges) r.also_holds.push_back(LimitLaw::kWllnRatio);
  if (dense_non_edges) r.also_holds.push_back(LimitLaw::kWllnComplementRatio);
  if (r.single_index_normal && r.regime != Regime::kCltSingle) {
    r.also_holds.push_back(LimitLaw::kCltSingle);
  }
  if (r.joint_law_open) r.also_holds.push_back(LimitLaw::kOpen);
  return r;
}

CovModel SigmaStar(double c, unsigned k) {
  CheckCovArgs(c, k);
  CovModel model{k, CovKind::kSigmaStar, c, Eigen::MatrixXd::Zero(k, k)};
  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned l = 1; l <= k; ++l) {
      double entry = IntPow(c, m + l - 1) /
                     ToDouble(Factorial(m - 1) * Factorial(l - 1));
      for (unsigned s = 1; s <= std::min(m, l); ++s) {
        entry += IntPow(c, m + l - s) /
                 ToDouble(Factorial(s) * Factorial(m - s) * Factorial(l - s));
      }
      model.matrix(m - 1, l - 1) = entry;
    }
  }
  return model;
}

double SigmaStarDet(double c, unsigned k) {
  CheckCovArgs(c, k);
  ExactInt denominator = 1;
  for (unsigned m = 1; m <= k; ++m) denominator *= Factorial(m);
  const Scaled den = ToScaled(denominator);
  int c_exp = 0;
  const double c_mant = std::frexp(c, &c_exp);
  const long power = static_cast<long>(k) * (k + 1) / 2;
  // c^power = c_mant^power * 2^(c_exp * power), with c_mant in [0.5, 1).
  const double log2_mant = power * std::log2(c_mant);
  const double log2_det =
      1.0 + log2_mant + static_cast<double>(c_exp) * power -
      (std::log2(den.mantissa) + static_cast<double>(den.exponent));
  const double whole = std::floor(log2_det);
  return std::ldexp(std::exp2(log2_det - whole), static_cast<int>(whole));
}

CovModel SigmaZagreb(double c, unsigned k) {
  CheckCovArgs(c, k);
  CovModel model{k, CovKind::kSigma, c, Eigen::MatrixXd::Zero(k, k)};
  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned l = 1; l <= k; ++l) {
      double entry = 0.0;
      for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= l; ++j) {
          double inner = static_cast<double>(i) * j * IntPow(c, i + j - 1);
          for (unsigned s = 1; s <= std::min(i, j); ++s) {
            const ExactInt ratio =
                Factorial(i) * Factorial(j) /
                (Factorial(s) * Factorial(i - s) * Factorial(j - s));
            inner += ToDouble(ratio) * IntPow(c, i + j - s);
          }
          entry += ToDouble(Stirling2(m, i) * Stirling2(l, j)) * inner;
        }
      }
      model.matrix(m - 1, l - 1) = entry;
    }
  }
  return model;
}

CovModel OnesMatrix(unsigned k) {
  if (k < 1) Fail(ErrorCode::kDomain, "matrix order must be positive");
  return {k, CovKind::kOnes, 0.0, Eigen::MatrixXd::Ones(k, k)};
}

Normalizer SingleIndexNormalizer(const graph::GnpParams& params, unsigned m) {
  return {m, moments::ExactMeanZagreb(params, m),
          std::sqrt(moments::AsympVarZagreb(params, m))};
}

Standardization Standardizer(const RegimeReport& regime,
                             const graph::GnpParams& params, unsigned k) {
  params.Validate();
  Standardization out;
  const double n = static_cast<double>(params.n);
  const double p = params.p;
  switch (regime.regime) {
    case Regime::kCltCritical:
      for (unsigned m = 1; m <= k; ++m) {
        out.norms.push_back({m, moments::ExactMeanZagreb(params, m),
                             std::sqrt(n)});
      }
      out.target = SigmaZagreb(*regime.parameter, k);
      break;
    case Regime::kCltDense:
      for (unsigned m = 1; m <= k; ++m) {
        out.norms.push_back({m, moments::ExactMeanZagreb(params, m),
                             m * IntPow(n * p, m) *
                                 std::sqrt(2.0 * (1.0 - p) / p)});
      }
      out.target = OnesMatrix(k);
      break;
    case Regime::kCltSparse:
      for (unsigned m = 1; m <= k; ++m) {
        double center = 0.0;
        for (unsigned j = 1; j <= m; ++j) {
          center += ToDouble(Stirling2(m, j)) * n * IntPow(n * p, j);
        }
        out.norms.push_back({m, center, std::sqrt(2.0 * n * n * p)});
      }
      out.target = OnesMatrix(k);
      break;
    case Regime::kCltSingle:
      for (unsigned m = 1; m <= k; ++m) {
        out.norms.push_back(SingleIndexNormalizer(params, m));
      }
      out.target = {k, CovKind::kMarginalIdentity, 0.0,
                    Eigen::MatrixXd::Identity(k, k)};
      break;
    default:
      Fail(ErrorCode::kRegime, "regime " +
                                   std::string(RegimeName(regime.regime)) +
                                   " has no Gaussian standardization");
  }
  return out;
}

}  // namespace zagreb::limits

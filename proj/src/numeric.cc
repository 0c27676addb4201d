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

#include "numeric.h"

#include <cmath>
#include <limits>

namespace zagreb {
namespace {

Scaled Normalize(double mantissa, long exponent) {
  if (mantissa == 0.0) return {};
  int e = 0;
  const double m = std::frexp(mantissa, &e);
  return {m, exponent + e};
}

Scaled Multiply(Scaled a, Scaled b) {
  return Normalize(a.mantissa * b.mantissa, a.exponent + b.exponent);
}

double ToDouble(Scaled s) {
  if (s.mantissa == 0.0) return 0.0;
  if (s.exponent > std::numeric_limits<double>::max_exponent) {
    return std::numeric_limits<double>::infinity();
  }
  if (s.exponent < std::numeric_limits<double>::min_exponent - 60) return 0.0;
  return std::ldexp(s.mantissa, static_cast<int>(s.exponent));
}

}  // namespace

void CompensatedSum::Add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

Scaled ScaledPow(double base, unsigned exponent) {
  Scaled result = Normalize(1.0, 0);
  Scaled square = Normalize(base, 0);
  while (exponent != 0) {
    if (exponent & 1U) result = Multiply(result, square);
    exponent >>= 1;
    if (exponent != 0) square = Multiply(square, square);
  }
  return result;
}

double ScaledProduct(const ExactInt& coefficient, double p, unsigned power,
                     double factor) {
  if (coefficient == 0 || factor == 0.0) return 0.0;
  Scaled s = Multiply(ToScaled(coefficient), ScaledPow(p, power));
  s = Multiply(s, Normalize(factor, 0));
  return ToDouble(s);
}

double OneMinus(double p) { return 1.0 - p; }

double OneMinusPow(double p, unsigned s) {
  // p - 1 is exact for p in [0.5, 1] (Sterbenz), keeping log accurate.
  const double log_p = p > 0.5 ? std::log1p(p - 1.0) : std::log(p);
  return -std::expm1(static_cast<double>(s) * log_p);
}

}  // namespace zagreb

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

#ifndef ZAGREB_NUMERIC_H_
#define ZAGREB_NUMERIC_H_

#include "exact_int.h"

namespace zagreb {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x);
  double Value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

// base^exponent by repeated squaring, kept in scaled form so that very
// small powers do not underflow before they meet a large coefficient.
Scaled ScaledPow(double base, unsigned exponent);

// coefficient * p^power * factor, where coefficient may exceed the double
// range. factor must be finite and nonnegative.
double ScaledProduct(const ExactInt& coefficient, double p, unsigned power,
                     double factor);

// 1 - p and 1 - p^s without cancellation for p near 1.
double OneMinus(double p);
double OneMinusPow(double p, unsigned s);

}  // namespace zagreb

#endif  // ZAGREB_NUMERIC_H_

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

#ifndef ZAGREB_EXACT_INT_H_
#define ZAGREB_EXACT_INT_H_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zagreb {

// Arbitrary-width signed integer. Every count, index value and
// combinatorial coefficient in the library lives in this type; arithmetic
// cannot wrap.
using ExactInt = boost::multiprecision::cpp_int;
using ExactVector = std::vector<ExactInt>;

std::string ToString(const ExactInt& v);

// Nearest double. Values above DBL_MAX become +inf; exact only below 2^53.
double ToDouble(const ExactInt& v);

// Splits a nonnegative value into mantissa in [0.5, 1) and a binary
// exponent, so products of huge coefficients and tiny probabilities can be
// formed without intermediate overflow. Zero yields {0, 0}.
struct Scaled {
  double mantissa = 0.0;
  long exponent = 0;
};
Scaled ToScaled(const ExactInt& v);

// Throws Error(kOverflow) if the value does not fit.
std::uint64_t ToUint64(const ExactInt& v);

}  // namespace zagreb

#endif  // ZAGREB_EXACT_INT_H_

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

#include "exact_int.h"

#include <cmath>
#include <limits>

#include "error.h"

namespace zagreb {

std::string ToString(const ExactInt& v) { return v.str(); }

double ToDouble(const ExactInt& v) {
  const Scaled s = ToScaled(abs(v));
  const double magnitude =
      s.exponent > std::numeric_limits<double>::max_exponent
          ? std::numeric_limits<double>::infinity()
          : std::ldexp(s.mantissa, static_cast<int>(s.exponent));
  return v < 0 ? -magnitude : magnitude;
}

Scaled ToScaled(const ExactInt& v) {
  if (v <= 0) return {};
  const unsigned bits = boost::multiprecision::msb(v) + 1;
  // Keep 64 significant bits; the rest only affects rounding below 2^-53.
  constexpr unsigned kKeep = 64;
  ExactInt top = v;
  long shift = 0;
  if (bits > kKeep) {
    shift = bits - kKeep;
    top >>= shift;
  }
  int e = 0;
  const double m = std::frexp(top.convert_to<double>(), &e);
  return {m, e + shift};
}

std::uint64_t ToUint64(const ExactInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    Fail(ErrorCode::kOverflow, "value " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

}  // namespace zagreb

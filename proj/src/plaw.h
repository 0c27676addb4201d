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

// Edge-probability laws p(n) of the three monomial shapes
//
//   a            (constant, 0 < a < 1)
//   a*n^-b       (vanishing)
//   1-a*n^-b     (approaching one)
//
// and their textual form.

#ifndef ZAGREB_PLAW_H_
#define ZAGREB_PLAW_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace zagreb::limits {

enum class PLawForm { kConst, kPowerLow, kPowerHigh };

struct PLaw {
  PLawForm form = PLawForm::kConst;
  double a = 0.5;
  double b = 0.0;  // unused for kConst
  // Smallest n >= 1 from which p(n) stays inside (0, 1).
  std::uint64_t n0 = 1;

  double Evaluate(std::uint64_t n) const;

  friend bool operator==(const PLaw& x, const PLaw& y) {
    return x.form == y.form && x.a == y.a && x.b == y.b;
  }
};

// Validates the parameters and computes n0. Throws kDomain.
PLaw MakePLaw(PLawForm form, double a, double b = 0.0);

// Grammar (whitespace allowed between tokens):
//   law := NUM | NUM "*" "n" "^" "-" NUM | "1" "-" NUM "*" "n" "^" "-" NUM
//   NUM := digit+ ( "." digit+ )?
// Throws ParseError carrying the 0-based column, or kDomain.
PLaw ParsePLaw(std::string_view text);

// Inverse of ParsePLaw for every law it accepts.
std::string FormatPLaw(const PLaw& law);

// Shortest fixed-notation decimal that reads back to the same double.
std::string FormatDecimal(double value);

}  // namespace zagreb::limits

#endif  // ZAGREB_PLAW_H_

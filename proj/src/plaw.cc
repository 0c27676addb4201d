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

#include "plaw.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "error.h"

namespace zagreb::limits {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PLaw Parse() {
    SkipSpace();
    const std::size_t first_at = pos_;
    const std::string_view first_text = Number();
    const double first = ToValue(first_text);
    SkipSpace();
    if (AtEnd()) return MakePLaw(PLawForm::kConst, first);
    if (Peek() == '-') {
      if (first_text != "1") {
        Error(first_at, "a law of the form 1-a*n^-b must start with '1'");
      }
      ++pos_;
      SkipSpace();
      const double a = ToValue(Number());
      const double b = PowerTail();
      return MakePLaw(PLawForm::kPowerHigh, a, b);
    }
    if (Peek() == '*') {
      const double b = PowerTail();
      return MakePLaw(PLawForm::kPowerLow, first, b);
    }
    Error(pos_, "expected '*', '-' or end of input");
  }

 private:
  // Consumes "*n^-NUM" (whitespace allowed) and returns NUM.
  double PowerTail() {
    for (char expected : std::string_view("*n^-")) {
      SkipSpace();
      if (AtEnd() || Peek() != expected) {
        Error(pos_, std::string("expected '") + expected + "'");
      }
      ++pos_;
    }
    SkipSpace();
    const double b = ToValue(Number());
    SkipSpace();
    if (!AtEnd()) Error(pos_, "expected end of input");
    return b;
  }

  std::string_view Number() {
    const std::size_t start = pos_;
    const auto digits = [&] {
      const std::size_t from = pos_;
      while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) {
        ++pos_;
      }
      return pos_ > from;
    };
    if (!digits()) Error(pos_, "expected a number");
    if (!AtEnd() && Peek() == '.') {
      ++pos_;
      if (!digits()) Error(pos_, "expected digits after '.'");
    }
    return text_.substr(start, pos_ - start);
  }

  static double ToValue(std::string_view token) {
    double value = 0.0;
    std::from_chars(token.data(), token.data() + token.size(), value);
    return value;
  }

  [[noreturn]] void Error(std::size_t at, const std::string& what) const {
    throw ParseError("p-law '" + std::string(text_) + "', column " +
                         std::to_string(at) + ": " + what,
                     -1, static_cast<long>(at));
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      ++pos_;
    }
  }
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double PLaw::Evaluate(std::uint64_t n) const {
  const double nn = static_cast<double>(n);
  switch (form) {
    case PLawForm::kConst:
      return a;
    case PLawForm::kPowerLow:
      return a * std::pow(nn, -b);
    case PLawForm::kPowerHigh:
      return 1.0 - a * std::pow(nn, -b);
  }
  return a;
}

PLaw MakePLaw(PLawForm form, double a, double b) {
  PLaw law;
  law.form = form;
  law.a = a;
  if (!(a > 0.0) || !std::isfinite(a)) {
    Fail(ErrorCode::kDomain, "p-law coefficient must be positive");
  }
  if (form == PLawForm::kConst) {
    if (!(a < 1.0)) {
      Fail(ErrorCode::kDomain, "constant p must lie strictly inside (0, 1)");
    }
    return law;
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    Fail(ErrorCode::kDomain, "p-law exponent must be positive");
  }
  law.b = b;
  // Both power forms need a * n^-b < 1, i.e. n > a^(1/b).
  const double threshold = std::pow(a, 1.0 / b);
  if (!(threshold < 1e18)) {
    Fail(ErrorCode::kDomain, "p-law stays outside (0, 1) for every usable n");
  }
  std::uint64_t n0 = static_cast<std::uint64_t>(std::floor(threshold)) + 1;
  const auto inside = [&](std::uint64_t n) {
    const double p = law.Evaluate(n);
    return p > 0.0 && p < 1.0;
  };
  while (!inside(n0)) ++n0;
  while (n0 > 1 && inside(n0 - 1)) --n0;
  law.n0 = n0;
  return law;
}

PLaw ParsePLaw(std::string_view text) { return Parser(text).Parse(); }

std::string FormatDecimal(double value) {
  char buf[512];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::string FormatPLaw(const PLaw& law) {
  switch (law.form) {
    case PLawForm::kConst:
      return FormatDecimal(law.a);
    case PLawForm::kPowerLow:
      return FormatDecimal(law.a) + "*n^-" + FormatDecimal(law.b);
    case PLawForm::kPowerHigh:
      return "1-" + FormatDecimal(law.a) + "*n^-" + FormatDecimal(law.b);
  }
  return {};
}

}  // namespace zagreb::limits

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

#include "combinatorics.h"

#include <array>
#include <string>

#include "error.h"

namespace zagreb::combinatorics {
namespace {

using Table = std::array<std::array<ExactInt, kMaxOrder + 1>, kMaxOrder + 1>;

// Built once on first use; magic statics make the initialisation
// thread-safe and the table is read-only afterwards.
const Table& StirlingTable() {
  static const Table table = [] {
    Table t{};
    t[0][0] = 1;
    for (unsigned k = 1; k <= kMaxOrder; ++k) {
      for (unsigned m = 1; m <= k; ++m) {
        t[k][m] = m * t[k - 1][m] + t[k - 1][m - 1];
      }
    }
    return t;
  }();
  return table;
}

void CheckOrder(unsigned k) {
  if (k > kMaxOrder) {
    Fail(ErrorCode::kDomain, "order " + std::to_string(k) +
                                 " exceeds the supported maximum " +
                                 std::to_string(kMaxOrder));
  }
}

const ExactInt kZero = 0;

}  // namespace

const ExactInt& Stirling2(unsigned k, unsigned m) {
  CheckOrder(k);
  if (m > k) return kZero;
  return StirlingTable()[k][m];
}

ExactVector Stirling2Row(unsigned k) {
  CheckOrder(k);
  const auto& row = StirlingTable()[k];
  return ExactVector(row.begin() + 1, row.begin() + 1 + k);
}

ExactInt Binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  ExactInt result = 1;
  // result stays integral: after step i it equals C(n-r+i, i).
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

ExactInt FallingFactorial(std::uint64_t n, std::uint64_t j) {
  if (j > n) {
    Fail(ErrorCode::kDomain, "falling factorial (" + std::to_string(n) + ")_" +
                                 std::to_string(j) + " needs j <= n");
  }
  ExactInt result = 1;
  for (std::uint64_t i = 0; i < j; ++i) result *= n - i;
  return result;
}

ExactInt Factorial(std::uint64_t n) { return FallingFactorial(n, n); }

ExactInt Multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
  ExactInt total = 0;
  for (auto part : parts) total += part;
  if (total != n) {
    Fail(ErrorCode::kDomain, "multinomial parts sum to " + total.str() +
                                 ", expected " + std::to_string(n));
  }
  ExactInt result = 1;
  std::uint64_t placed = 0;
  for (auto part : parts) {
    placed += part;
    result *= Binomial(placed, part);
  }
  return result;
}

}  // namespace zagreb::combinatorics

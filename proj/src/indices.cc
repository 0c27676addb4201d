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

#include "indices.h"

#include <algorithm>
#include <string>
#include <utility>

#include "combinatorics.h"
#include "error.h"

namespace zagreb::indices {
namespace {

void CheckK(unsigned k) {
  if (k < 1 || k > combinatorics::kMaxOrder) {
    Fail(ErrorCode::kDomain, "index order must be in 1.." +
                                 std::to_string(combinatorics::kMaxOrder));
  }
}

// (degree, multiplicity) pairs with nonzero multiplicity, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> Histogram(
    const graph::DegreeSequence& d) {
  const auto degrees = d.degrees();
  const std::uint64_t max_degree =
      degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::uint64_t> count(max_degree + 1, 0);
  for (auto v : degrees) ++count[v];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t v = 0; v <= max_degree; ++v) {
    if (count[v] != 0) out.emplace_back(v, count[v]);
  }
  return out;
}

}  // namespace

ExactVector TransformMatrix::Apply(const ExactVector& stars) const {
  ExactVector out(k, 0);
  for (unsigned m = 0; m < k; ++m) {
    for (unsigned l = 0; l <= m; ++l) out[m] += entries[m][l] * stars[l];
  }
  return out;
}

ExactInt ZagrebIndex(const graph::DegreeSequence& d, unsigned k) {
  return ZagrebVector(d, k).values.back();
}

IndexVector ZagrebVector(const graph::DegreeSequence& d, unsigned k) {
  CheckK(k);
  IndexVector out{k, ExactVector(k, 0)};
  for (const auto& [degree, count] : Histogram(d)) {
    if (degree == 0) continue;
    ExactInt term = count;
    for (unsigned m = 0; m < k; ++m) {
      term *= degree;
      out.values[m] += term;
    }
  }
  return out;
}

ExactInt StarCount(const graph::DegreeSequence& d, unsigned star_size) {
  if (star_size < 2) Fail(ErrorCode::kDomain, "stars have at least 2 vertices");
  ExactInt total = 0;
  for (const auto& [degree, count] : Histogram(d)) {
    total += count * combinatorics::Binomial(degree, star_size - 1);
  }
  return total;
}

StarVector StarVectorOf(const graph::DegreeSequence& d, unsigned k) {
  CheckK(k);
  StarVector out{k, ExactVector(k, 0)};
  for (const auto& [degree, count] : Histogram(d)) {
    ExactInt choose = count;  // count * C(degree, m), built incrementally
    for (unsigned m = 1; m <= k && m <= degree; ++m) {
      choose *= degree - m + 1;
      choose /= m;
      out.values[m - 1] += choose;
    }
  }
  return out;
}

TransformMatrix Transform(unsigned k) {
  CheckK(k);
  TransformMatrix a{k, std::vector<ExactVector>(k, ExactVector(k, 0))};
  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned l = 1; l <= m; ++l) {
      a.entries[m - 1][l - 1] =
          combinatorics::Factorial(l) * combinatorics::Stirling2(m, l);
    }
  }
  return a;
}

IdentityReport CheckStarIdentity(const graph::DegreeSequence& d, unsigned k) {
  IdentityReport report;
  report.lhs = ZagrebVector(d, k).values;
  report.rhs = Transform(k).Apply(StarVectorOf(d, k).values);
  report.holds = report.lhs == report.rhs;
  return report;
}

IdentityReport CheckComplementIdentity(const graph::DegreeSequence& d,
                                       unsigned k) {
  IdentityReport report;
  report.lhs = ZagrebVector(d, k).values;
  const auto complement = ZagrebVector(graph::ComplementDegrees(d), k).values;
  const ExactInt n = d.vertex_count();
  const ExactInt n1 = n - 1;
  report.rhs.resize(k);
  for (unsigned j = 1; j <= k; ++j) {
    ExactInt rhs = n * pow(n1, j);
    for (unsigned m = 1; m <= j; ++m) {
      ExactInt term = combinatorics::Binomial(j, m) * pow(n1, j - m) *
                      complement[m - 1];
      if (m % 2 == 1) term = -term;
      rhs += term;
    }
    report.rhs[j - 1] = rhs;
  }
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace zagreb::indices

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

// Exact integer combinatorial kernels: Stirling numbers of the second kind,
// binomial and multinomial coefficients, falling factorials.

#ifndef ZAGREB_COMBINATORICS_H_
#define ZAGREB_COMBINATORICS_H_

#include <cstdint>
#include <span>

#include "exact_int.h"

namespace zagreb::combinatorics {

// Largest supported index order. Requests beyond it are rejected.
inline constexpr unsigned kMaxOrder = 64;

// {k m}: partitions of a k-set into m nonempty blocks, via
// {k m} = m{k-1 m} + {k-1 m-1} with {0 0} = 1 and {k 0} = 0 for k >= 1.
// Zero when m > k. Throws kDomain if k > kMaxOrder.
const ExactInt& Stirling2(unsigned k, unsigned m);

// [{k 1}, ..., {k k}]; empty for k = 0.
ExactVector Stirling2Row(unsigned k);

ExactInt Binomial(std::uint64_t n, std::uint64_t r);

// n (n-1) ... (n-j+1). Throws kDomain if j > n.
ExactInt FallingFactorial(std::uint64_t n, std::uint64_t j);

ExactInt Factorial(std::uint64_t n);

// n! / prod(parts_i!). Throws kDomain unless sum(parts) == n.
ExactInt Multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

}  // namespace zagreb::combinatorics

#endif  // ZAGREB_COMBINATORICS_H_

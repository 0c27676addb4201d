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

#include "rng.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "error.h"

namespace zagreb {

std::uint64_t MixSeed(Seed seed) {
  std::uint64_t z = seed.master + 0x9E3779B97F4A7C15ULL * (seed.stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::Geometric(double log1m_p) {
  const double gap = std::floor(std::log(UniformOpenClosed()) / log1m_p);
  if (!(gap < 0x1.0p64)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(gap);
}

double Rng::StandardNormal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(UniformOpenClosed()));
  const double angle = 2.0 * std::numbers::pi * UniformOpenClosed();
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::Poisson(double lambda) {
  if (!(lambda > 0.0 && lambda <= 500.0)) {
    Fail(ErrorCode::kDomain, "Poisson sampler needs lambda in (0, 500]");
  }
  const double u = UniformOpenClosed();
  double pmf = std::exp(-lambda);
  double cdf = pmf;
  std::uint64_t j = 0;
  while (u > cdf) {
    ++j;
    pmf *= lambda / static_cast<double>(j);
    const double next = cdf + pmf;
    if (next == cdf) break;  // rounding floor reached in the far tail
    cdf = next;
  }
  return j;
}

}  // namespace zagreb

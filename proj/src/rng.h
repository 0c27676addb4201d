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

#ifndef ZAGREB_RNG_H_
#define ZAGREB_RNG_H_

#include <cstdint>
#include <random>

namespace zagreb {

// A replicate's random stream is a pure function of (master, stream).
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

// 64-bit avalanche mix of (master, stream) (splitmix64 finaliser).
std::uint64_t MixSeed(Seed seed);

// Portable generator: every draw is built from raw mt19937_64 output with
// fixed arithmetic, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(MixSeed(seed)) {}

  // Uniform on (0, 1], 53-bit resolution.
  double UniformOpenClosed() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Number of failures before the first success of a Bernoulli(p) sequence,
  // given log1p(-p). Saturates at UINT64_MAX.
  std::uint64_t Geometric(double log1m_p);

  double StandardNormal();

  // Inversion sampler; lambda must be in (0, 500].
  std::uint64_t Poisson(double lambda);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace zagreb

#endif  // ZAGREB_RNG_H_

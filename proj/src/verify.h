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

// Named verification suites. Each suite reproduces one acceptance property
// of the library end to end and reports a list of checks.

#ifndef ZAGREB_VERIFY_H_
#define ZAGREB_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gof.h"

namespace zagreb::verify {

struct CheckItem {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured quantity
  double threshold = 0.0;  // bound it was compared with
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  std::vector<CheckItem> checks;
  std::vector<montecarlo::TestResult> tests;
  double seconds = 0.0;

  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

// identity, oracle, matrices, clt-critical, clt-dense, clt-sparse, poisson,
// wlln, determinism, regime.
const std::vector<std::string>& SuiteNames();

// Runs one suite, or every suite for "all". Throws kInvalidArgument for an
// unknown name.
std::vector<SuiteResult> RunSuite(std::string_view name,
                                  const VerifyOptions& options);

// Regime fixtures shared with the unit tests: law text, k, expected regime
// name, expected parameter (NaN if none), joint law open.
struct RegimeFixture {
  const char* law;
  unsigned k;
  const char* regime;
  double parameter;
  bool joint_open;
};
const std::vector<RegimeFixture>& RegimeFixtures();

}  // namespace zagreb::verify

#endif  // ZAGREB_VERIFY_H_

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

// Command-line front end. Everything goes through the C API.

#ifndef ZAGREB_TOOLS_CLI_H_
#define ZAGREB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace zagreb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace zagreb::cli

#endif  // ZAGREB_TOOLS_CLI_H_

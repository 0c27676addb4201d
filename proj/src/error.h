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

#ifndef ZAGREB_ERROR_H_
#define ZAGREB_ERROR_H_

#include <stdexcept>
#include <string>

namespace zagreb {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDomain = 2,
  kParse = 3,
  kOverflow = 4,
  kSizeGuard = 5,
  kIo = 6,
  kRegime = 7,
};

// Every failure raised by the library core. The C API maps `code()` onto
// its status enum one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based line (edge lists) or 0-based column
// (p-law strings); the unused coordinate is -1.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line, long column)
      : Error(ErrorCode::kParse, what), line_(line), column_(column) {}

  long line() const noexcept { return line_; }
  long column() const noexcept { return column_; }

 private:
  long line_;
  long column_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace zagreb

#endif  // ZAGREB_ERROR_H_

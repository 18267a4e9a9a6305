/*
   Copyright 2026 The stringy authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stringy {

// Every failure raised by the library carries one of these codes. The CLI
// prints the code name on stderr, so names are part of the public contract.
enum class ErrorCode {
  kNotATree,
  kBadShape,
  kDiscrepancyRange,
  kSingularMatrix,
  kNotLogTerminal,
  kWrongShape,
  kActionMismatch,
  kNotGNormal,
  kMultiEdge,
  kNonKlt,
  kDegreeTooLarge,
  kBoundExceeded,
  kUnknownEntry,
  kDivisionByZero,
  kInvalidInput,
  kParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace stringy

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

#include "stringy/error.hpp"

namespace stringy {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotATree: return "NOT_A_TREE";
    case ErrorCode::kBadShape: return "BAD_SHAPE";
    case ErrorCode::kDiscrepancyRange: return "DISCREPANCY_RANGE";
    case ErrorCode::kSingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::kNotLogTerminal: return "NOT_LOG_TERMINAL";
    case ErrorCode::kWrongShape: return "WRONG_SHAPE";
    case ErrorCode::kActionMismatch: return "ACTION_MISMATCH";
    case ErrorCode::kNotGNormal: return "NOT_G_NORMAL";
    case ErrorCode::kMultiEdge: return "MULTI_EDGE";
    case ErrorCode::kNonKlt: return "NON_KLT";
    case ErrorCode::kDegreeTooLarge: return "DEGREE_TOO_LARGE";
    case ErrorCode::kBoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::kUnknownEntry: return "UNKNOWN_ENTRY";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

}  // namespace stringy

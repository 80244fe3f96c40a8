// Copyright 2026 The smeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMEVAL_ERROR_HPP_
#define SMEVAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace smeval {

// Failure categories raised by the library. The C API maps each one onto a
// stable smeval_status value, so new entries go at the end.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParseError,
  kEmptyTrajectory,
  kNonMonotonicTimestamps,
  kInvalidOrientation,
  kDuplicateTimestamp,
  kEmptySubmapAfterAlignment,
  kNoOverlap,
  kZeroNormDescriptor,
  kMissingDescriptor,
  kDimensionMismatch,
  kDegenerateEvaluation,
  kNoGroundTruthMatches,
  kInvalidConfig,
  kInvariantViolation,
  kIoError,
};

const char* ErrorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised for malformed input; `line` is 1-based, or 0 for binary payloads.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              line == 0 ? reason
                        : "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace smeval

#endif  // SMEVAL_ERROR_HPP_

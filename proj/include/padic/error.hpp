/* Copyright (C) 2026 The padic-diaphony authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic {

enum class ErrorCode {
  NonPrimeBase,
  DuplicateBase,
  EmptyBases,
  OutOfUnitInterval,
  InvalidDigit,
  DimensionMismatch,
  BaseMismatch,
  BoxTooLarge,
  ZeroIndex,
  CountOverflow,
  PhaseOverflow,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeBase: return "NonPrimeBase";
    case ErrorCode::DuplicateBase: return "DuplicateBase";
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::OutOfUnitInterval: return "OutOfUnitInterval";
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::ZeroIndex: return "ZeroIndex";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::PhaseOverflow: return "PhaseOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// the message carries the offending value where there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace padic

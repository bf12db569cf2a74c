// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSEP_ERROR_H_
#define QSEP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsep {

enum class ErrorCode {
  kNotHermitian,
  kNoConvergence,
  kNotPositive,
  kBadTrace,
  kSpectrumOutOfRange,
  kLengthMismatch,
  kBadWeights,
  kBadRank,
  kDimensionMismatch,
  kEmptySet,
  kWrongDimension,
  kBadGridStep,
  kSetTooLarge,
  kInvalidArgument,
  kNumerical,
  kParseError,
  kMultiStateFile,
  kInvalidMeasurement,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The code is
// stable and machine-checkable; the message carries the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code-name prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace qsep

#endif  // QSEP_ERROR_H_

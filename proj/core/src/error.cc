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

#include "qsep/error.h"

namespace qsep {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kBadTrace: return "BadTrace";
    case ErrorCode::kSpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kBadRank: return "BadRank";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kBadGridStep: return "BadGridStep";
    case ErrorCode::kSetTooLarge: return "SetTooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNumerical: return "Numerical";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMultiStateFile: return "MultiStateFile";
    case ErrorCode::kInvalidMeasurement: return "InvalidMeasurement";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace qsep

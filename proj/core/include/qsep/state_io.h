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

#ifndef QSEP_STATE_IO_H_
#define QSEP_STATE_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsep/complex_matrix.h"
#include "qsep/states.h"

namespace qsep {

// File formats (UTF-8 JSON, matrices row-major, `dim` rows of `dim` entries):
//
//   state set:    {"dim": 2, "states": [{"label": "a", "matrix": M}, ...]}
//   measurement:  {"dim": 2, "matrix": M}
//
// where M = [[{"re": 1.0, "im": 0.0}, ...], ...]. "label" is optional.
// Writers emit every number with 17 significant digits, so a written file
// parses back to bit-identical matrices.

// A state-set file before any quantum-state validation.
struct RawState {
  std::optional<std::string> label;
  ComplexMatrix matrix;
};

struct RawStateSet {
  int dim = 0;
  std::vector<RawState> states;
};

// Malformed JSON or schema violations throw kParseError (with line and
// column for syntax errors, a JSON path otherwise). Consistent rows whose
// size disagrees with "dim" throw kDimensionMismatch; ragged rows throw
// kParseError.
RawStateSet ParseStateSet(std::string_view json_text);
ComplexMatrix ParseMeasurement(std::string_view json_text);

// Validates every state; rethrows the first failure with the state index
// prepended.
StateSet ToStateSet(const RawStateSet& raw);

std::string SerializeStateSet(const StateSet& set);
std::string SerializeMeasurement(const ComplexMatrix& m);

// %.17g, with ".0" appended when the result would otherwise read as an
// integer (keeps -0.0 distinct from 0).
std::string FormatDouble(double x);

// Throws kIo.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

RawStateSet ReadStateSetFile(const std::filesystem::path& path);
ComplexMatrix ReadMeasurementFile(const std::filesystem::path& path);

}  // namespace qsep

#endif  // QSEP_STATE_IO_H_

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

#ifndef QSEP_TOOLS_RUN_RECORD_H_
#define QSEP_TOOLS_RUN_RECORD_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qsep/complex_matrix.h"
#include "qsep/discrimination.h"
#include "qsep/minimax.h"
#include "qsep/states.h"

namespace qsep::cli {

// What one CLI invocation did, as emitted by --json.
struct RunRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  // Only present with --timing, so default output is reproducible.
  std::optional<std::int64_t> wall_time_ms;

  nlohmann::json ToJson() const;
  // Throws qsep::Error(kParseError) on a malformed record.
  static RunRecord FromJson(const nlohmann::json& j);

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

nlohmann::json MatrixToJson(const ComplexMatrix& m);
ComplexMatrix MatrixFromJson(const nlohmann::json& j);
nlohmann::json WeightsToJson(const MixtureWeights& w);
nlohmann::json ConfigToJson(const SolverConfig& cfg);
nlohmann::json SaddleResultToJson(const SaddleResult& r);
nlohmann::json GapReportToJson(const GapReport& g);
nlohmann::json CertReportToJson(const CertReport& c);

}  // namespace qsep::cli

#endif  // QSEP_TOOLS_RUN_RECORD_H_

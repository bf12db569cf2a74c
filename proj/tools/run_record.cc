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

#include "run_record.h"

#include "qsep/error.h"

namespace qsep::cli {

using nlohmann::json;

json RunRecord::ToJson() const {
  json j = {{"command", command}, {"inputs", inputs}, {"result", result}};
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j;
}

RunRecord RunRecord::FromJson(const json& j) {
  try {
    RunRecord record;
    record.command = j.at("command").get<std::string>();
    record.inputs = j.at("inputs");
    record.result = j.at("result");
    if (j.contains("wall_time_ms")) {
      record.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    }
    return record;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("run record: ") + e.what());
  }
}

json MatrixToJson(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) {
      row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix MatrixFromJson(const json& j) {
  const int dim = static_cast<int>(j.size());
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m(r, c) = Complex(j.at(r).at(c).at("re").get<double>(),
                        j.at(r).at(c).at("im").get<double>());
    }
  }
  return m;
}

json WeightsToJson(const MixtureWeights& w) {
  return json(std::vector<double>(w.weights().begin(), w.weights().end()));
}

json ConfigToJson(const SolverConfig& cfg) {
  json j = {{"max_rounds", cfg.max_rounds},
            {"target_gap", cfg.target_gap},
            {"check_interval", cfg.check_interval},
            {"seed", cfg.seed}};
  if (cfg.learning_rate) {
    j["learning_rate"] = *cfg.learning_rate;
  } else {
    j["learning_rate"] = "auto";
  }
  return j;
}

json SaddleResultToJson(const SaddleResult& r) {
  json trace = json::array();
  for (const Checkpoint& c : r.trace) {
    trace.push_back({{"round", c.round},
                     {"lower_bound", c.lower_bound},
                     {"upper_bound", c.upper_bound}});
  }
  return {{"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"gap", r.gap},
          {"converged", r.converged},
          {"rounds_used", r.rounds_used},
          {"learning_rate", r.learning_rate},
          {"mu0", WeightsToJson(r.mu0)},
          {"mu1", WeightsToJson(r.mu1)},
          {"best_mu0", WeightsToJson(r.best_mu0)},
          {"best_mu1", WeightsToJson(r.best_mu1)},
          {"measurement", MatrixToJson(r.measurement.matrix())},
          {"trace", std::move(trace)}};
}

json GapReportToJson(const GapReport& g) {
  json rows = json::array();
  for (int i = 0; i < g.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < g.cols; ++j) row.push_back(g.gap(i, j));
    rows.push_back(std::move(row));
  }
  return {{"min_gap", g.min_gap},
          {"argmin_pair", {g.argmin_pair.first, g.argmin_pair.second}},
          {"per_pair_gaps", std::move(rows)}};
}

json CertReportToJson(const CertReport& c) {
  return {{"epsilon_hat", c.epsilon_hat},
          {"trials", c.trials},
          {"violations", c.violations},
          {"max_violation", c.max_violation},
          {"min_distance", c.min_distance},
          {"worst_mu0", WeightsToJson(c.worst_mu0)},
          {"worst_mu1", WeightsToJson(c.worst_mu1)},
          {"certified", c.certified()}};
}

}  // namespace qsep::cli

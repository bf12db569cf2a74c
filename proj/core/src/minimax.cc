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

#include "qsep/minimax.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsep/error.h"
#include "qsep/hermitian.h"
#include "qsep/random.h"

namespace qsep {
namespace {

void RequireCompatible(const StateSet& s0, const StateSet& s1) {
  if (s0.dim() != s1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "S0 has dimension " + std::to_string(s0.dim()) +
                    ", S1 has dimension " + std::to_string(s1.dim()));
  }
}

void Marginals(std::span<const double> pairs, int rows, int cols,
               std::vector<double>& row_marginal,
               std::vector<double>& col_marginal) {
  row_marginal.assign(rows, 0.0);
  col_marginal.assign(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      row_marginal[i] += pairs[i * cols + j];
      col_marginal[j] += pairs[i * cols + j];
    }
  }
}

// Rescales to sum exactly-ish 1 before handing to MixtureWeights.
MixtureWeights ToWeights(std::vector<double> w) {
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return MixtureWeights::Create(std::move(w));
}

struct MixturePair {
  DensityMatrix rho;
  DensityMatrix sigma;
};

MixturePair Mix(std::span<const double> w0, std::span<const double> w1,
                const StateSet& s0, const StateSet& s1) {
  return {DensityMatrix::AssumeValid(MixMatrices(w0, s0)),
          DensityMatrix::AssumeValid(MixMatrices(w1, s1))};
}

}  // namespace

void ValidateConfig(const SolverConfig& cfg) {
  if (cfg.max_rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_rounds must be >= 1");
  }
  if (!(cfg.target_gap > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "target_gap must be positive");
  }
  if (cfg.learning_rate && !(*cfg.learning_rate > 0.0 &&
                             std::isfinite(*cfg.learning_rate))) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be positive");
  }
  if (cfg.check_interval < 1) {
    throw Error(ErrorCode::kInvalidArgument, "check_interval must be >= 1");
  }
}

double AutoLearningRate(int num_pairs, int max_rounds) {
  return std::sqrt(8.0 * std::log(static_cast<double>(num_pairs)) /
                   static_cast<double>(max_rounds));
}

PovmElement BestResponseMeasurement(const MixtureWeights& mu0,
                                    const MixtureWeights& mu1,
                                    const StateSet& s0, const StateSet& s1) {
  RequireCompatible(s0, s1);
  return HelstromMeasurement(MixtureState(mu0, s0), MixtureState(mu1, s1));
}

SaddleResult SolveSaddle(const StateSet& s0, const StateSet& s1,
                         const SolverConfig& cfg) {
  ValidateConfig(cfg);
  RequireCompatible(s0, s1);

  const int rows = s0.size();
  const int cols = s1.size();
  const int num_pairs = rows * cols;
  const int dim = s0.dim();
  const double eta =
      cfg.learning_rate.value_or(AutoLearningRate(num_pairs, cfg.max_rounds));

  // T = I/2 has gap exactly 1/2 (Tr rho - Tr sigma) ~ 0 on every pair, so the
  // value is never below it.
  PovmElement best_measurement =
      PovmElement::AssumeValid(ComplexMatrix::Identity(dim) * 0.5);
  double lower = SeparationGap(best_measurement, s0, s1).min_gap;

  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> best_w0;
  std::vector<double> best_w1;

  std::vector<double> log_weights(num_pairs, 0.0);
  std::vector<double> probs(num_pairs);
  std::vector<double> prob_sum(num_pairs, 0.0);
  std::vector<double> w0;
  std::vector<double> w1;
  std::vector<double> first(rows);
  std::vector<double> second(cols);
  ComplexMatrix measurement_sum(dim);
  // Response sums at earlier checkpoints, for suffix averages.
  std::vector<std::pair<int, ComplexMatrix>> snapshots;
  std::vector<Checkpoint> trace;

  auto offer_upper = [&](const std::vector<double>& a,
                         const std::vector<double>& b, double value) {
    if (value < upper) {
      upper = value;
      best_w0 = a;
      best_w1 = b;
    }
  };

  int round = 0;
  bool converged = false;
  while (round < cfg.max_rounds) {
    ++round;

    const double max_log =
        *std::max_element(log_weights.begin(), log_weights.end());
    double total = 0.0;
    for (int k = 0; k < num_pairs; ++k) {
      probs[k] = std::exp(log_weights[k] - max_log);
      total += probs[k];
    }
    for (double& p : probs) p /= total;

    Marginals(probs, rows, cols, w0, w1);
    const MixturePair mix = Mix(w0, w1, s0, s1);
    const PovmElement response = HelstromMeasurement(mix.rho, mix.sigma);
    offer_upper(w0, w1, TraceDistance(mix.rho, mix.sigma));

    for (int i = 0; i < rows; ++i) {
      first[i] = TraceOfProduct(response.matrix(), s0[i].matrix()).real();
    }
    for (int j = 0; j < cols; ++j) {
      second[j] = TraceOfProduct(response.matrix(), s1[j].matrix()).real();
    }
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        log_weights[i * cols + j] -= eta * (first[i] - second[j]);
      }
    }
    measurement_sum += response.matrix();
    for (int k = 0; k < num_pairs; ++k) prob_sum[k] += probs[k];

    if (round % cfg.check_interval != 0 && round != cfg.max_rounds) continue;

    // Candidates: the average of all responses so far and the average over
    // the latest window starting at or before round / 2. The early rounds
    // dominate the full average's shortfall; the suffix drops them.
    // Averages of POVM elements are POVM elements; verified, not assumed.
    auto offer_lower = [&](const ComplexMatrix& sum, int count) {
      const PovmElement average = ValidatePovmElement(sum * (1.0 / count));
      const double average_gap = SeparationGap(average, s0, s1).min_gap;
      if (average_gap > lower) {
        lower = average_gap;
        best_measurement = average;
      }
    };
    offer_lower(measurement_sum, round);
    const auto window_start = std::find_if(
        snapshots.rbegin(), snapshots.rend(),
        [round](const auto& snap) { return 2 * snap.first <= round; });
    if (window_start != snapshots.rend()) {
      offer_lower(measurement_sum - window_start->second,
                  round - window_start->first);
    }
    snapshots.emplace_back(round, measurement_sum);
    std::vector<double> avg_w0;
    std::vector<double> avg_w1;
    Marginals(prob_sum, rows, cols, avg_w0, avg_w1);
    for (double& x : avg_w0) x /= round;
    for (double& x : avg_w1) x /= round;
    const MixturePair avg_mix = Mix(avg_w0, avg_w1, s0, s1);
    offer_upper(avg_w0, avg_w1, TraceDistance(avg_mix.rho, avg_mix.sigma));

    trace.push_back({round, lower, upper});
    if (upper - lower <= cfg.target_gap) {
      converged = true;
      break;
    }
  }

  std::vector<double> avg_w0;
  std::vector<double> avg_w1;
  Marginals(prob_sum, rows, cols, avg_w0, avg_w1);

  return SaddleResult{
      .measurement = std::move(best_measurement),
      .mu0 = ToWeights(std::move(avg_w0)),
      .mu1 = ToWeights(std::move(avg_w1)),
      .best_mu0 = ToWeights(std::move(best_w0)),
      .best_mu1 = ToWeights(std::move(best_w1)),
      .lower_bound = lower,
      .upper_bound = upper,
      .gap = upper - lower,
      .rounds_used = round,
      .converged = converged,
      .learning_rate = eta,
      .trace = std::move(trace),
  };
}

MixtureDistance MinMixtureDistance(const StateSet& s0, const StateSet& s1,
                                   const SolverConfig& cfg) {
  SaddleResult result = SolveSaddle(s0, s1, cfg);
  return {std::move(result.best_mu0), std::move(result.best_mu1),
          result.upper_bound};
}

CertReport CertifyForward(const PovmElement& t, const StateSet& s0,
                          const StateSet& s1, int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  }
  RequireCompatible(s0, s1);
  const double epsilon_hat = SeparationGap(t, s0, s1).min_gap;

  Rng rng(seed);
  double min_distance = std::numeric_limits<double>::infinity();
  std::vector<double> worst0;
  std::vector<double> worst1;
  int violations = 0;
  double max_violation = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> w0 = rng.UniformSimplex(s0.size());
    std::vector<double> w1 = rng.UniformSimplex(s1.size());
    const MixturePair mix = Mix(w0, w1, s0, s1);
    const double distance = TraceDistance(mix.rho, mix.sigma);
    const double shortfall = epsilon_hat - distance;
    if (shortfall > kCertifyTolerance) ++violations;
    max_violation = std::max(max_violation, shortfall);
    if (distance < min_distance) {
      min_distance = distance;
      worst0 = std::move(w0);
      worst1 = std::move(w1);
    }
  }
  return CertReport{
      .epsilon_hat = epsilon_hat,
      .trials = trials,
      .violations = violations,
      .max_violation = max_violation,
      .min_distance = min_distance,
      .worst_mu0 = ToWeights(std::move(worst0)),
      .worst_mu1 = ToWeights(std::move(worst1)),
  };
}

}  // namespace qsep

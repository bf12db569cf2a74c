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

#ifndef QSEP_MINIMAX_H_
#define QSEP_MINIMAX_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsep/discrimination.h"
#include "qsep/states.h"

namespace qsep {

// Zero-sum game between a measurement player choosing a POVM element T and an
// adversary choosing a pair (rho_i, sigma_j) from S0 x S1, with payoff
// Tr(T rho_i) - Tr(T sigma_j). Its value is the best separation margin eps*:
//
//   max_T min_{i,j} gap = min_{mu0, mu1} TraceDistance(rho_mu0, sigma_mu1).
//
// The adversary runs multiplicative weights over the finite pair set, the
// measurement player answers each round with the exact best response (the
// Helstrom projector for the current marginal mixtures). The time-averaged
// measurement certifies a lower bound on eps*, the visited mixtures certify
// an upper bound.

struct SolverConfig {
  int max_rounds = 20000;
  double target_gap = 1e-4;
  // nullopt selects sqrt(8 ln(|S0| |S1|) / max_rounds).
  std::optional<double> learning_rate;
  int check_interval = 100;
  // Unused; the solver is deterministic. Kept so run records can carry it.
  std::uint64_t seed = 0;
};

struct Checkpoint {
  int round = 0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

struct SaddleResult {
  // Best time-averaged measurement seen at a checkpoint (or I/2 if none beat
  // it). lower_bound == SeparationGap(measurement, ...).min_gap.
  PovmElement measurement;
  // Marginals of the time-averaged pair distribution.
  MixtureWeights mu0;
  MixtureWeights mu1;
  // Mixture pair attaining upper_bound.
  MixtureWeights best_mu0;
  MixtureWeights best_mu1;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;
  int rounds_used = 0;
  bool converged = false;
  double learning_rate = 0.0;
  std::vector<Checkpoint> trace;
};

// Throws kInvalidArgument on a malformed config.
void ValidateConfig(const SolverConfig& cfg);

double AutoLearningRate(int num_pairs, int max_rounds);

// Helstrom measurement of the two mixtures.
PovmElement BestResponseMeasurement(const MixtureWeights& mu0,
                                    const MixtureWeights& mu1,
                                    const StateSet& s0, const StateSet& s1);

// Throws kDimensionMismatch if the sets live in different dimensions.
SaddleResult SolveSaddle(const StateSet& s0, const StateSet& s1,
                         const SolverConfig& cfg = {});

struct MixtureDistance {
  MixtureWeights mu0;
  MixtureWeights mu1;
  double distance = 0.0;
};

// The lowest-distance mixture pair found by SolveSaddle under the same config;
// distance equals that run's upper_bound.
MixtureDistance MinMixtureDistance(const StateSet& s0, const StateSet& s1,
                                   const SolverConfig& cfg = {});

inline constexpr double kCertifyTolerance = 1e-9;

struct CertReport {
  // min_gap of the measurement over S0 x S1.
  double epsilon_hat = 0.0;
  int trials = 0;
  // Trials with TraceDistance < epsilon_hat - 1e-9.
  int violations = 0;
  // max(0, epsilon_hat - TraceDistance) over all trials.
  double max_violation = 0.0;
  // Smallest distance sampled and the mixtures attaining it.
  double min_distance = 0.0;
  MixtureWeights worst_mu0;
  MixtureWeights worst_mu1;

  bool certified() const { return max_violation <= kCertifyTolerance; }
};

// Samples `trials` mixture pairs uniformly from the two simplices
// (Rng::UniformSimplex, S0 weights drawn before S1 weights in each trial) and
// checks TraceDistance(rho_mu0, sigma_mu1) >= epsilon_hat for each.
// Throws kInvalidArgument unless trials >= 1.
CertReport CertifyForward(const PovmElement& t, const StateSet& s0,
                          const StateSet& s1, int trials, std::uint64_t seed);

}  // namespace qsep

#endif  // QSEP_MINIMAX_H_

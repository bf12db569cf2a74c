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

#ifndef QSEP_DISCRIMINATION_H_
#define QSEP_DISCRIMINATION_H_

#include <utility>
#include <vector>

#include "qsep/states.h"

namespace qsep {

// Distances here are HALF trace norms: TraceDistance(rho, sigma) is
// (1/2) sum_k |lambda_k(rho - sigma)|, which equals the largest achievable
// Tr(T rho) - Tr(T sigma) over POVM elements T. A condition of the form
// ||rho - sigma||_1 >= 2 eps therefore reads TraceDistance >= eps throughout
// this library.

inline constexpr double kImagResidueTolerance = 1e-9;
inline constexpr double kGapBand = 1e-9;
inline constexpr double kSeparatingSlack = 1e-12;

// Result of scoring one measurement against every (rho_i, sigma_j) pair.
struct GapReport {
  int rows = 0;  // |S0|
  int cols = 0;  // |S1|
  // Row-major, per_pair_gaps[i * cols + j] = PairGap(T, S0[i], S1[j]).
  std::vector<double> per_pair_gaps;
  double min_gap = 0.0;
  // Lexicographically lowest (i, j) attaining min_gap.
  std::pair<int, int> argmin_pair{0, 0};

  double gap(int i, int j) const { return per_pair_gaps[i * cols + j]; }
};

// Throws kDimensionMismatch.
double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Projector onto the strictly positive eigenspace of rho - sigma; attains
// TraceDistance(rho, sigma) as its pair gap.
PovmElement HelstromMeasurement(const DensityMatrix& rho,
                                const DensityMatrix& sigma);

// Re Tr(T rho) - Re Tr(T sigma). Throws kNumerical if the imaginary residue
// exceeds 1e-9 and kDimensionMismatch on mixed dimensions.
double PairGap(const PovmElement& t, const DensityMatrix& rho,
               const DensityMatrix& sigma);

// Throws kNumerical if any pair gap falls outside [-1 - 1e-9, 1 + 1e-9].
GapReport SeparationGap(const PovmElement& t, const StateSet& s0,
                        const StateSet& s1);

// min_gap >= eps - 1e-12. Throws kInvalidArgument unless eps > 0.
bool IsSeparating(const PovmElement& t, const StateSet& s0, const StateSet& s1,
                  double eps);

}  // namespace qsep

#endif  // QSEP_DISCRIMINATION_H_

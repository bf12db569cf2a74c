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

#ifndef QSEP_ORACLES_H_
#define QSEP_ORACLES_H_

#include "qsep/states.h"

namespace qsep {

// Brute-force reference values for the game value, for cross-checking the
// solver on tiny instances. Both are exhaustive grid searches and get slow
// quickly; they are meant for tests.

// max over a grid of qubit POVM elements T = a I + x X + y Y + z Z of
// SeparationGap(T).min_gap. a runs over {0, h, 2h, ...} within [0, 1] and
// x, y, z over {-1, -1 + h, ...} within [-1, 1], h = grid_step; points whose
// eigenvalues a +- sqrt(x^2 + y^2 + z^2) leave [0, 1] are skipped. The pair
// gap is 2-Lipschitz in each Bloch coordinate, so the result is within
// about 2 sqrt(3) h / 2 of the true value from below.
//
// Throws kWrongDimension unless dim == 2, kBadGridStep unless
// 0 < grid_step <= 0.1.
double BruteForceEpsilonD2(const StateSet& s0, const StateSet& s1,
                           double grid_step);

// min over the product of two simplex grids of TraceDistance(rho_mu0,
// sigma_mu1). Each simplex grid holds the weight vectors with entries k / N,
// N = ceil(1 / grid_step). Never below the true minimum; the distance is
// 1-Lipschitz in total variation of either weight vector, so the excess is
// O(grid_step).
//
// Throws kSetTooLarge if either set has more than 4 states, kBadGridStep
// unless 0 < grid_step <= 0.25, kDimensionMismatch on mixed dimensions.
double MixtureGridOracle(const StateSet& s0, const StateSet& s1,
                         double grid_step);

}  // namespace qsep

#endif  // QSEP_ORACLES_H_

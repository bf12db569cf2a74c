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

#include "qsep/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qsep/discrimination.h"
#include "qsep/error.h"

namespace qsep {
namespace {

constexpr double kFeasibilitySlack = 1e-12;
constexpr int kMaxOracleSetSize = 4;

// Number of grid points k * step, k >= 0, with k * step <= span.
int GridCount(double span, double step) {
  return static_cast<int>(std::floor(span / step + 1e-9)) + 1;
}

// Every vector of `parts` non-negative integers summing to `total`, in
// lexicographic order.
std::vector<std::vector<int>> Compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(parts, 0);
  auto recurse = [&](auto& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      current[index] = k;
      self(self, index + 1, remaining - k);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

}  // namespace

double BruteForceEpsilonD2(const StateSet& s0, const StateSet& s1,
                           double grid_step) {
  if (s0.dim() != 2 || s1.dim() != 2) {
    throw Error(ErrorCode::kWrongDimension, "oracle requires dimension 2");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.1)) {
    throw Error(ErrorCode::kBadGridStep, "grid_step must be in (0, 0.1]");
  }

  const Complex i(0.0, 1.0);
  const int alpha_count = GridCount(1.0, grid_step);
  const int coord_count = GridCount(2.0, grid_step);

  double best = -std::numeric_limits<double>::infinity();
  for (int ix = 0; ix < coord_count; ++ix) {
    const double x = -1.0 + ix * grid_step;
    for (int iy = 0; iy < coord_count; ++iy) {
      const double y = -1.0 + iy * grid_step;
      for (int iz = 0; iz < coord_count; ++iz) {
        const double z = -1.0 + iz * grid_step;
        const double radius = std::sqrt(x * x + y * y + z * z);
        if (radius > 0.5 + kFeasibilitySlack) continue;
        for (int ia = 0; ia < alpha_count; ++ia) {
          const double alpha = ia * grid_step;
          if (alpha - radius < -kFeasibilitySlack ||
              alpha + radius > 1.0 + kFeasibilitySlack) {
            continue;
          }
          ComplexMatrix t(2);
          t(0, 0) = alpha + z;
          t(1, 1) = alpha - z;
          t(0, 1) = x - i * y;
          t(1, 0) = x + i * y;
          const double gap =
              SeparationGap(PovmElement::AssumeValid(std::move(t)), s0, s1)
                  .min_gap;
          best = std::max(best, gap);
        }
      }
    }
  }
  return best;
}

double MixtureGridOracle(const StateSet& s0, const StateSet& s1,
                         double grid_step) {
  if (s0.size() > kMaxOracleSetSize || s1.size() > kMaxOracleSetSize) {
    throw Error(ErrorCode::kSetTooLarge,
                "mixture grid oracle supports at most " +
                    std::to_string(kMaxOracleSetSize) + " states per set");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.25)) {
    throw Error(ErrorCode::kBadGridStep, "grid_step must be in (0, 0.25]");
  }
  if (s0.dim() != s1.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "sets differ in dimension");
  }

  const int resolution = static_cast<int>(std::ceil(1.0 / grid_step - 1e-9));
  auto to_mixtures = [resolution](const StateSet& set) {
    std::vector<DensityMatrix> mixtures;
    for (const std::vector<int>& counts : Compositions(resolution, set.size())) {
      std::vector<double> w(counts.size());
      for (std::size_t k = 0; k < counts.size(); ++k) {
        w[k] = static_cast<double>(counts[k]) / resolution;
      }
      mixtures.push_back(DensityMatrix::AssumeValid(MixMatrices(w, set)));
    }
    return mixtures;
  };
  const std::vector<DensityMatrix> first = to_mixtures(s0);
  const std::vector<DensityMatrix> second = to_mixtures(s1);

  double best = std::numeric_limits<double>::infinity();
  for (const DensityMatrix& rho : first) {
    for (const DensityMatrix& sigma : second) {
      best = std::min(best, TraceDistance(rho, sigma));
    }
  }
  return best;
}

}  // namespace qsep

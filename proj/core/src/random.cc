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

#include "qsep/random.h"

#include <cmath>
#include <numbers>

namespace qsep {

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::pair<double, double> Rng::NormalPair() {
  const double u1 = 1.0 - Uniform01();
  const double u2 = Uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double Rng::Exponential() { return -std::log(1.0 - Uniform01()); }

std::vector<double> Rng::UniformSimplex(int n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = Exponential();
    total += x;
  }
  // total == 0 needs every draw to be exactly 0; fall back to a vertex.
  if (total == 0.0) {
    w.assign(n, 0.0);
    w[0] = 1.0;
    return w;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace qsep

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

#ifndef QSEP_RANDOM_H_
#define QSEP_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qsep {

// Reproducible variate source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard. The conversions below are written
// out here instead of using <random> distributions, whose algorithms are
// implementation-defined:
//   Uniform01:    (x >> 11) * 2^-53, in [0, 1).
//   NormalPair:   Box-Muller, u1 = 1 - Uniform01() in (0, 1], u2 = Uniform01();
//                 returns (R cos(2 pi u2), R sin(2 pi u2)), R = sqrt(-2 ln u1).
//   Exponential:  -ln(1 - Uniform01()).
// Changing any of these changes every seeded artifact and golden file.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double Uniform01();
  std::pair<double, double> NormalPair();
  double Exponential();

  // A point drawn uniformly from the probability simplex with n vertices
  // (normalized i.i.d. exponentials).
  std::vector<double> UniformSimplex(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qsep

#endif  // QSEP_RANDOM_H_

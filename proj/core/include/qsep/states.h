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

#ifndef QSEP_STATES_H_
#define QSEP_STATES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsep/complex_matrix.h"

namespace qsep {

inline constexpr double kSpectralTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kTraceImagTolerance = 1e-12;
inline constexpr double kSimplexTolerance = 1e-9;

// Hermitian, positive semidefinite, unit trace (all within the tolerances
// above). Obtain one through ValidateDensity.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

  // No checks. For values that are valid by construction, e.g. convex
  // combinations of already validated states.
  static DensityMatrix AssumeValid(ComplexMatrix m) {
    return DensityMatrix(std::move(m));
  }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// Hermitian operator with spectrum in [0, 1].
class PovmElement {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

  static PovmElement AssumeValid(ComplexMatrix m) {
    return PovmElement(std::move(m));
  }

 private:
  explicit PovmElement(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// A point on the probability simplex.
class MixtureWeights {
 public:
  // Throws kBadWeights if any weight is negative or non-finite, or the sum is
  // more than 1e-9 away from 1.
  static MixtureWeights Create(std::vector<double> weights);
  static MixtureWeights Uniform(int n);
  static MixtureWeights PointMass(int n, int index);

  std::span<const double> weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }

 private:
  explicit MixtureWeights(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

// Non-empty ordered list of states sharing one dimension. Sizes of the two
// sets being discriminated may differ.
class StateSet {
 public:
  // Throws kEmptySet, kDimensionMismatch, or kLengthMismatch (labels given
  // but not one per state).
  static StateSet Create(std::vector<DensityMatrix> states,
                         std::vector<std::optional<std::string>> labels = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(states_.size()); }
  const DensityMatrix& operator[](int i) const { return states_[i]; }
  std::span<const DensityMatrix> states() const { return states_; }
  const std::optional<std::string>& label(int i) const { return labels_[i]; }

 private:
  StateSet() = default;
  int dim_ = 0;
  std::vector<DensityMatrix> states_;
  std::vector<std::optional<std::string>> labels_;
};

// Throws kNotHermitian, kNotPositive (minimum eigenvalue in the message) or
// kBadTrace (trace in the message), checked in that order.
DensityMatrix ValidateDensity(const ComplexMatrix& m);

// Throws kNotHermitian or kSpectrumOutOfRange (offending eigenvalue in the
// message).
PovmElement ValidatePovmElement(const ComplexMatrix& m);

// sum_i mu_i * states[i]. Throws kLengthMismatch.
DensityMatrix MixtureState(const MixtureWeights& mu, const StateSet& set);

// Unvalidated sum_i w_i * states[i]; zero weights are skipped.
ComplexMatrix MixMatrices(std::span<const double> weights, const StateSet& set);

// G G^dagger / Tr(G G^dagger) with G a dim x rank matrix of i.i.d. standard
// complex normals from Rng(seed), filled row by row; each entry consumes one
// NormalPair (real, imaginary). Throws kBadRank unless 1 <= rank <= dim.
DensityMatrix RandomDensity(int dim, int rank, std::uint64_t seed);

// `count` states from RandomDensity; state k uses the k-th output of
// std::mt19937_64(seed) as its seed. Unlabeled.
StateSet RandomStateSet(int dim, int count, int rank, std::uint64_t seed);

}  // namespace qsep

#endif  // QSEP_STATES_H_

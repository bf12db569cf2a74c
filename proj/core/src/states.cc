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

#include "qsep/states.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>

#include "qsep/error.h"
#include "qsep/hermitian.h"
#include "qsep/random.h"

namespace qsep {
namespace {

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void RequireHermitian(const ComplexMatrix& m) {
  const double asym = MaxHermitianAsymmetry(m);
  if (!(asym <= kHermitianTolerance)) {
    throw Error(ErrorCode::kNotHermitian, "max entry asymmetry " + Num(asym));
  }
}

}  // namespace

MixtureWeights MixtureWeights::Create(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kBadWeights, "no weights");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw Error(ErrorCode::kBadWeights,
                  "weight " + std::to_string(i) + " is " + Num(weights[i]));
    }
    total += weights[i];
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw Error(ErrorCode::kBadWeights, "weights sum to " + Num(total));
  }
  return MixtureWeights(std::move(weights));
}

MixtureWeights MixtureWeights::Uniform(int n) {
  if (n < 1) throw Error(ErrorCode::kBadWeights, "no weights");
  return MixtureWeights(std::vector<double>(n, 1.0 / n));
}

MixtureWeights MixtureWeights::PointMass(int n, int index) {
  if (index < 0 || index >= n) {
    throw Error(ErrorCode::kBadWeights, "point mass index out of range");
  }
  std::vector<double> w(n, 0.0);
  w[index] = 1.0;
  return MixtureWeights(std::move(w));
}

StateSet StateSet::Create(std::vector<DensityMatrix> states,
                          std::vector<std::optional<std::string>> labels) {
  if (states.empty()) throw Error(ErrorCode::kEmptySet, "state set is empty");
  const int dim = states.front().dim();
  for (std::size_t i = 1; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "state " + std::to_string(i) + " has dimension " +
                      std::to_string(states[i].dim()) + ", expected " +
                      std::to_string(dim));
    }
  }
  if (labels.empty()) {
    labels.resize(states.size());
  } else if (labels.size() != states.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one label per state required");
  }
  StateSet set;
  set.dim_ = dim;
  set.states_ = std::move(states);
  set.labels_ = std::move(labels);
  return set;
}

DensityMatrix ValidateDensity(const ComplexMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::kInvalidArgument, "0x0 matrix");
  RequireHermitian(m);
  const EigenDecomposition eig = HermitianEig(m);
  const double min_eig = eig.eigenvalues.front();
  if (min_eig < -kSpectralTolerance) {
    throw Error(ErrorCode::kNotPositive, "minimum eigenvalue " + Num(min_eig));
  }
  const Complex tr = Trace(m);
  if (std::abs(tr.real() - 1.0) > kTraceTolerance ||
      std::abs(tr.imag()) > kTraceImagTolerance) {
    throw Error(ErrorCode::kBadTrace,
                "trace " + Num(tr.real()) + " + " + Num(tr.imag()) + "i");
  }
  return DensityMatrix::AssumeValid(m);
}

PovmElement ValidatePovmElement(const ComplexMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::kInvalidArgument, "0x0 matrix");
  RequireHermitian(m);
  const EigenDecomposition eig = HermitianEig(m);
  for (double lambda : eig.eigenvalues) {
    if (lambda < -kSpectralTolerance || lambda > 1.0 + kSpectralTolerance) {
      throw Error(ErrorCode::kSpectrumOutOfRange, "eigenvalue " + Num(lambda));
    }
  }
  return PovmElement::AssumeValid(m);
}

ComplexMatrix MixMatrices(std::span<const double> weights, const StateSet& set) {
  if (static_cast<int>(weights.size()) != set.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(weights.size()) + " weights for " +
                    std::to_string(set.size()) + " states");
  }
  ComplexMatrix out(set.dim());
  for (int i = 0; i < set.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const auto src = set[i].matrix().entries();
    for (int r = 0; r < out.dim(); ++r) {
      for (int c = 0; c < out.dim(); ++c) {
        out(r, c) += weights[i] * src[r * out.dim() + c];
      }
    }
  }
  return out;
}

DensityMatrix MixtureState(const MixtureWeights& mu, const StateSet& set) {
  return ValidateDensity(MixMatrices(mu.weights(), set));
}

DensityMatrix RandomDensity(int dim, int rank, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::kBadRank, "rank " + std::to_string(rank) +
                                         " not in [1, " + std::to_string(dim) +
                                         "]");
  }
  Rng rng(seed);
  std::vector<Complex> g(static_cast<std::size_t>(dim) * rank);
  for (Complex& z : g) {
    const auto [re, im] = rng.NormalPair();
    z = Complex(re, im);
  }
  ComplexMatrix gram(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < rank; ++k) {
        sum += g[r * rank + k] * std::conj(g[c * rank + k]);
      }
      gram(r, c) = sum;
    }
  }
  const double tr = Trace(gram).real();
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) gram(r, c) /= tr;
  }
  for (int i = 0; i < dim; ++i) gram(i, i) = gram(i, i).real();
  return ValidateDensity(gram);
}

StateSet RandomStateSet(int dim, int count, int rank, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kEmptySet, "count must be >= 1");
  std::mt19937_64 seeds(seed);
  std::vector<DensityMatrix> states;
  states.reserve(count);
  for (int k = 0; k < count; ++k) states.push_back(RandomDensity(dim, rank, seeds()));
  return StateSet::Create(std::move(states));
}

}  // namespace qsep

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

// Test-only generators and closed-form references.

#ifndef QSEP_TESTS_TEST_UTIL_H_
#define QSEP_TESTS_TEST_UTIL_H_

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qsep/complex_matrix.h"
#include "qsep/hermitian.h"
#include "qsep/random.h"
#include "qsep/states.h"

namespace qsep::testing {

inline ComplexMatrix Diag(std::initializer_list<double> d) {
  const std::vector<double> v(d);
  return ComplexMatrix::Diagonal(v);
}

inline ComplexMatrix PauliX() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

// |0><0|, |1><1|, |+><+|, I/2 as validated states.
inline DensityMatrix Ket0() { return ValidateDensity(Diag({1.0, 0.0})); }
inline DensityMatrix Ket1() { return ValidateDensity(Diag({0.0, 1.0})); }
inline DensityMatrix KetPlus() {
  ComplexMatrix m(2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 0.5;
  return ValidateDensity(m);
}
inline DensityMatrix MaximallyMixed(int d) {
  return ValidateDensity(ComplexMatrix::Identity(d) * (1.0 / d));
}

inline StateSet SetOf(std::vector<DensityMatrix> states) {
  return StateSet::Create(std::move(states));
}

// Hermitian with real and imaginary parts of each entry uniform in [-1, 1]
// (diagonal real).
inline ComplexMatrix RandomHermitian(int dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = 2.0 * rng.Uniform01() - 1.0;
    for (int c = r + 1; c < dim; ++c) {
      const Complex z(2.0 * rng.Uniform01() - 1.0, 2.0 * rng.Uniform01() - 1.0);
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  return m;
}

// Orthonormal columns by Gram-Schmidt on complex Gaussian vectors; no
// eigensolver involved. Returns `count` columns of length dim.
inline std::vector<std::vector<Complex>> RandomOrthonormal(int dim, int count,
                                                           Rng& rng) {
  std::vector<std::vector<Complex>> cols;
  while (static_cast<int>(cols.size()) < count) {
    std::vector<Complex> v(dim);
    for (Complex& z : v) {
      const auto [re, im] = rng.NormalPair();
      z = Complex(re, im);
    }
    for (const auto& u : cols) {
      Complex proj = 0.0;
      for (int k = 0; k < dim; ++k) proj += std::conj(u[k]) * v[k];
      for (int k = 0; k < dim; ++k) v[k] -= proj * u[k];
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (Complex& z : v) z /= norm;
    cols.push_back(std::move(v));
  }
  return cols;
}

inline ComplexMatrix RandomProjector(int dim, int rank, Rng& rng) {
  ComplexMatrix p(dim);
  for (const auto& v : RandomOrthonormal(dim, rank, rng)) {
    p += ComplexMatrix::OuterProduct(v);
  }
  return p;
}

// Random Hermitian squashed into spectrum (0, 1) through a logistic map.
inline PovmElement RandomPovmElement(int dim, Rng& rng) {
  EigenDecomposition eig = HermitianEig(RandomHermitian(dim, rng) * 4.0);
  for (double& lambda : eig.eigenvalues) lambda = 1.0 / (1.0 + std::exp(-lambda));
  return ValidatePovmElement(Symmetrized(Reconstruct(eig)));
}

inline ComplexMatrix RandomUnitary(int dim, Rng& rng) {
  return HermitianEig(RandomHermitian(dim, rng)).eigenvectors;
}

// Closed-form eigenvalues of the 2x2 Hermitian [[a, b], [conj(b), d]].
inline std::pair<double, double> Eigenvalues2x2(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean - radius, mean + radius};
}

// Half trace norm of rho - sigma for qubits, from the closed form.
inline double QubitTraceDistance(const ComplexMatrix& rho,
                                 const ComplexMatrix& sigma) {
  const ComplexMatrix d = rho - sigma;
  const auto [lo, hi] = Eigenvalues2x2(d(0, 0).real(), d(0, 1), d(1, 1).real());
  return 0.5 * (std::abs(lo) + std::abs(hi));
}

// A random instance with the given shape; rank cycles through 1..dim.
inline std::pair<StateSet, StateSet> RandomInstance(int dim, int n0, int n1,
                                                    std::uint64_t seed) {
  std::vector<DensityMatrix> a;
  std::vector<DensityMatrix> b;
  for (int k = 0; k < n0; ++k) {
    a.push_back(RandomDensity(dim, 1 + k % dim, seed * 1000 + k));
  }
  for (int k = 0; k < n1; ++k) {
    b.push_back(RandomDensity(dim, 1 + k % dim, seed * 1000 + 500 + k));
  }
  return {StateSet::Create(std::move(a)), StateSet::Create(std::move(b))};
}

}  // namespace qsep::testing

#endif  // QSEP_TESTS_TEST_UTIL_H_

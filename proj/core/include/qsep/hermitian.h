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

#ifndef QSEP_HERMITIAN_H_
#define QSEP_HERMITIAN_H_

#include <vector>

#include "qsep/complex_matrix.h"

namespace qsep {

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kPositiveEigenvalueCutoff = 1e-10;
inline constexpr double kJacobiRelativeTolerance = 1e-13;
inline constexpr int kMaxJacobiSweeps = 100;

struct EigenDecomposition {
  // Ascending.
  std::vector<double> eigenvalues;
  // Column k is the unit eigenvector for eigenvalues[k].
  ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi on (M + M^dagger) / 2.
//
// Throws kNotHermitian when MaxHermitianAsymmetry(m) exceeds
// kHermitianTolerance, kInvalidArgument for an empty matrix, and
// kNoConvergence if the off-diagonal norm has not dropped below
// kJacobiRelativeTolerance * ||M||_F after kMaxJacobiSweeps sweeps.
// Bit-for-bit deterministic. Equal eigenvalues keep the order in which the
// sweeps left them on the diagonal.
EigenDecomposition HermitianEig(const ComplexMatrix& m);

// Sum of v_k v_k^dagger over eigenpairs with lambda_k > 1e-10. Kernel and
// negative directions are excluded.
ComplexMatrix PositivePartProjector(const ComplexMatrix& h);

// V diag(lambda) V^dagger.
ComplexMatrix Reconstruct(const EigenDecomposition& eig);

}  // namespace qsep

#endif  // QSEP_HERMITIAN_H_

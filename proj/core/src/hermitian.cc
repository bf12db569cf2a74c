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

#include "qsep/hermitian.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsep/error.h"

namespace qsep {
namespace {

// One two-sided rotation zeroing a(p, q). The unitary acts on the (p, q)
// plane as
//   J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  a(p, q) = |a(p, q)| e^{i phi},
// i.e. a phase that makes a(p, q) real followed by the real Jacobi rotation.
void Rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = std::conj(apq) / r;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  const int n = a.dim();
  // a <- a J
  for (int k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  // a <- J^dagger a
  for (int k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  // v <- v J
  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition HermitianEig(const ComplexMatrix& m) {
  if (m.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "eigendecomposition of 0x0 matrix");
  }
  const double asym = MaxHermitianAsymmetry(m);
  if (!(asym <= kHermitianTolerance)) {
    throw Error(ErrorCode::kNotHermitian,
                "max entry asymmetry " + std::to_string(asym));
  }

  const int n = m.dim();
  ComplexMatrix a = Symmetrized(m);
  ComplexMatrix v = ComplexMatrix::Identity(n);
  const double threshold = kJacobiRelativeTolerance * FrobeniusNorm(a);

  int sweep = 0;
  while (OffDiagonalNorm(a) > threshold) {
    if (sweep == kMaxJacobiSweeps) {
      throw Error(ErrorCode::kNoConvergence,
                  "off-diagonal norm " + std::to_string(OffDiagonalNorm(a)) +
                      " after " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) Rotate(a, v, p, q);
    }
    ++sweep;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix PositivePartProjector(const ComplexMatrix& h) {
  const EigenDecomposition eig = HermitianEig(h);
  const int n = h.dim();
  ComplexMatrix p(n);
  for (int k = 0; k < n; ++k) {
    if (!(eig.eigenvalues[k] > kPositiveEigenvalueCutoff)) continue;
    for (int r = 0; r < n; ++r) {
      const Complex vr = eig.eigenvectors(r, k);
      for (int c = 0; c < n; ++c) {
        p(r, c) += vr * std::conj(eig.eigenvectors(c, k));
      }
    }
  }
  return p;
}

ComplexMatrix Reconstruct(const EigenDecomposition& eig) {
  const int n = eig.eigenvectors.dim();
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r) {
      const Complex vr = eig.eigenvectors(r, k) * eig.eigenvalues[k];
      for (int c = 0; c < n; ++c) {
        out(r, c) += vr * std::conj(eig.eigenvectors(c, k));
      }
    }
  }
  return out;
}

}  // namespace qsep

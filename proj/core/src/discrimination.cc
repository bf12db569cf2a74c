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

#include "qsep/discrimination.h"

#include <cmath>
#include <string>

#include "qsep/error.h"
#include "qsep/hermitian.h"

namespace qsep {
namespace {

void RequireSameDim(int a, int b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

// Real part of Tr(T rho), checking that the imaginary residue is negligible.
double Expectation(const ComplexMatrix& t, const ComplexMatrix& rho) {
  const Complex value = TraceOfProduct(t, rho);
  if (std::abs(value.imag()) > kImagResidueTolerance) {
    throw Error(ErrorCode::kNumerical,
                "Tr(T rho) has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  RequireSameDim(rho.dim(), sigma.dim(), "trace distance");
  const EigenDecomposition eig = HermitianEig(rho.matrix() - sigma.matrix());
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

PovmElement HelstromMeasurement(const DensityMatrix& rho,
                                const DensityMatrix& sigma) {
  RequireSameDim(rho.dim(), sigma.dim(), "Helstrom measurement");
  return PovmElement::AssumeValid(
      PositivePartProjector(rho.matrix() - sigma.matrix()));
}

double PairGap(const PovmElement& t, const DensityMatrix& rho,
               const DensityMatrix& sigma) {
  RequireSameDim(t.dim(), rho.dim(), "pair gap");
  RequireSameDim(t.dim(), sigma.dim(), "pair gap");
  return Expectation(t.matrix(), rho.matrix()) -
         Expectation(t.matrix(), sigma.matrix());
}

GapReport SeparationGap(const PovmElement& t, const StateSet& s0,
                        const StateSet& s1) {
  RequireSameDim(t.dim(), s0.dim(), "separation gap");
  RequireSameDim(t.dim(), s1.dim(), "separation gap");

  // Tr(T rho_i) and Tr(T sigma_j) once each; the pair gap is their difference.
  std::vector<double> first(s0.size());
  std::vector<double> second(s1.size());
  for (int i = 0; i < s0.size(); ++i) {
    first[i] = Expectation(t.matrix(), s0[i].matrix());
  }
  for (int j = 0; j < s1.size(); ++j) {
    second[j] = Expectation(t.matrix(), s1[j].matrix());
  }

  GapReport report;
  report.rows = s0.size();
  report.cols = s1.size();
  report.per_pair_gaps.resize(static_cast<std::size_t>(report.rows) *
                              report.cols);
  for (int i = 0; i < report.rows; ++i) {
    for (int j = 0; j < report.cols; ++j) {
      const double g = first[i] - second[j];
      if (!(std::abs(g) <= 1.0 + kGapBand)) {
        throw Error(ErrorCode::kNumerical,
                    "pair gap " + std::to_string(g) + " outside [-1, 1]");
      }
      report.per_pair_gaps[i * report.cols + j] = g;
      if ((i == 0 && j == 0) || g < report.min_gap) {
        report.min_gap = g;
        report.argmin_pair = {i, j};
      }
    }
  }
  return report;
}

bool IsSeparating(const PovmElement& t, const StateSet& s0, const StateSet& s1,
                  double eps) {
  if (!(eps > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  }
  return SeparationGap(t, s0, s1).min_gap >= eps - kSeparatingSlack;
}

}  // namespace qsep

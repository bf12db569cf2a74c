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

#include "qsep/complex_matrix.h"

#include <gtest/gtest.h>

#include "qsep/error.h"
#include "qsep/random.h"
#include "test_util.h"

namespace qsep {
namespace {

using testing::Diag;

TEST(ComplexMatrixTest, RowMajorLayout) {
  ComplexMatrix m(2, {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)});
  EXPECT_EQ(m(0, 1), Complex(2, 0));
  EXPECT_EQ(m(1, 0), Complex(3, 0));
}

TEST(ComplexMatrixTest, RejectsWrongEntryCount) {
  try {
    ComplexMatrix m(2, std::vector<Complex>(3));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(ComplexMatrixTest, TraceExamples) {
  EXPECT_EQ(Trace(ComplexMatrix::Identity(4)), Complex(4.0, 0.0));
  EXPECT_EQ(Trace(ComplexMatrix::Zero(3)), Complex(0.0, 0.0));
  EXPECT_EQ(Trace(Diag({0.75, 0.25})), Complex(1.0, 0.0));
}

TEST(ComplexMatrixTest, TraceIsAdditive) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 8;
    const ComplexMatrix a = testing::RandomHermitian(dim, rng);
    const ComplexMatrix b = testing::RandomHermitian(dim, rng);
    EXPECT_LE(std::abs(Trace(a + b) - (Trace(a) + Trace(b))), 1e-12);
  }
}

TEST(ComplexMatrixTest, TraceOfProductMatchesProduct) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 6;
    const ComplexMatrix a = testing::RandomHermitian(dim, rng);
    const ComplexMatrix b = testing::RandomHermitian(dim, rng);
    EXPECT_LE(std::abs(TraceOfProduct(a, b) - Trace(a * b)), 1e-12);
  }
}

TEST(ComplexMatrixTest, AdjointAndAsymmetry) {
  ComplexMatrix m(2);
  m(0, 1) = Complex(1.0, 2.0);
  m(1, 0) = Complex(1.0, -2.0);
  EXPECT_EQ(MaxHermitianAsymmetry(m), 0.0);
  EXPECT_EQ(m.Adjoint(), m);
  m(1, 0) = Complex(1.0, 2.0);
  EXPECT_DOUBLE_EQ(MaxHermitianAsymmetry(m), 4.0);
  EXPECT_EQ(MaxHermitianAsymmetry(Symmetrized(m)), 0.0);
}

TEST(ComplexMatrixTest, MismatchedArithmeticThrows) {
  EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(3), Error);
  EXPECT_THROW(ComplexMatrix(2) * ComplexMatrix(3), Error);
  EXPECT_THROW(TraceOfProduct(ComplexMatrix(2), ComplexMatrix(3)), Error);
}

TEST(ComplexMatrixTest, Norms) {
  const ComplexMatrix m = testing::PauliX() + Diag({3.0, 0.0});
  EXPECT_DOUBLE_EQ(FrobeniusNorm(m), std::sqrt(11.0));
  EXPECT_DOUBLE_EQ(OffDiagonalNorm(m), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(MaxAbsEntry(m), 3.0);
}

}  // namespace
}  // namespace qsep

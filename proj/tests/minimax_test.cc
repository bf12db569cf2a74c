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

#include "qsep/minimax.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qsep/error.h"
#include "qsep/oracles.h"
#include "test_util.h"

namespace qsep {
namespace {

using testing::Diag;
using testing::Ket0;
using testing::Ket1;
using testing::KetPlus;
using testing::SetOf;

void ExpectSaddleInvariants(const SaddleResult& r, const SolverConfig& cfg) {
  EXPECT_LE(r.lower_bound, r.upper_bound + 1e-9);
  EXPECT_GE(r.lower_bound, -1e-9);
  EXPECT_LE(r.upper_bound, 1.0 + 1e-9);
  EXPECT_EQ(r.converged, r.gap <= cfg.target_gap);
  EXPECT_EQ(r.gap, r.upper_bound - r.lower_bound);
  EXPECT_NO_THROW(ValidatePovmElement(r.measurement.matrix()));
  for (const Checkpoint& c : r.trace) {
    EXPECT_LE(c.lower_bound, c.upper_bound + 1e-9) << "round " << c.round;
  }
}

TEST(BestResponseTest, PointMassesReduceToHelstrom) {
  const auto [s0, s1] = testing::RandomInstance(3, 3, 2, 6);
  const PovmElement t = BestResponseMeasurement(MixtureWeights::PointMass(3, 2),
                                                MixtureWeights::PointMass(2, 1),
                                                s0, s1);
  EXPECT_EQ(t.matrix(), HelstromMeasurement(s0[2], s1[1]).matrix());
}

TEST(BestResponseTest, EqualMixturesGiveZero) {
  const StateSet s0 = SetOf({Ket0(), Ket1()});
  const StateSet s1 = SetOf({testing::MaximallyMixed(2)});
  const PovmElement t = BestResponseMeasurement(
      MixtureWeights::Uniform(2), MixtureWeights::Uniform(1), s0, s1);
  EXPECT_EQ(t.matrix(), ComplexMatrix::Zero(2));
}

TEST(BestResponseTest, AchievesMixtureDistance) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [s0, s1] = testing::RandomInstance(2 + trial % 3, 3, 2, trial);
    const MixtureWeights mu0 = MixtureWeights::Create(rng.UniformSimplex(3));
    const MixtureWeights mu1 = MixtureWeights::Create(rng.UniformSimplex(2));
    const DensityMatrix rho = MixtureState(mu0, s0);
    const DensityMatrix sigma = MixtureState(mu1, s1);
    const PovmElement t = BestResponseMeasurement(mu0, mu1, s0, s1);
    EXPECT_NEAR(PairGap(t, rho, sigma), TraceDistance(rho, sigma), 1e-9);
  }
}

TEST(SolveSaddleTest, OrthogonalSingletons) {
  const SolverConfig cfg;
  const SaddleResult r = SolveSaddle(SetOf({Ket0()}), SetOf({Ket1()}), cfg);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.lower_bound, 1.0, 1e-4);
  EXPECT_NEAR(r.upper_bound, 1.0, 1e-4);
  ExpectSaddleInvariants(r, cfg);
}

TEST(SolveSaddleTest, OverlappingHullsHaveZeroValue) {
  const SolverConfig cfg;
  const SaddleResult r =
      SolveSaddle(SetOf({Ket0(), Ket1()}), SetOf({testing::MaximallyMixed(2)}), cfg);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.upper_bound, 1e-4);
  EXPECT_NEAR(r.mu0[0], 0.5, 0.025);
  EXPECT_NEAR(r.mu0[1], 0.5, 0.025);
  ExpectSaddleInvariants(r, cfg);
}

TEST(SolveSaddleTest, ZeroVersusPlusMatchesClosedFormAndOracle) {
  const double closed_form =
      testing::QubitTraceDistance(Ket0().matrix(), KetPlus().matrix());
  const StateSet s0 = SetOf({Ket0()});
  const StateSet s1 = SetOf({KetPlus()});
  const SolverConfig cfg;
  const SaddleResult r = SolveSaddle(s0, s1, cfg);
  EXPECT_NEAR(r.lower_bound, closed_form, cfg.target_gap);
  EXPECT_NEAR(r.upper_bound, closed_form, cfg.target_gap);
  EXPECT_NEAR(BruteForceEpsilonD2(s0, s1, 0.02), closed_form, 0.05);
}

TEST(SolveSaddleTest, RandomInstancesConvergeWithInvariants) {
  SolverConfig cfg;
  cfg.target_gap = 1e-3;
  for (int seed = 0; seed < 12; ++seed) {
    const int dim = 2 + seed % 3;
    const auto [s0, s1] =
        testing::RandomInstance(dim, 1 + seed % 4, 1 + (seed / 3) % 4, 300 + seed);
    const SaddleResult r = SolveSaddle(s0, s1, cfg);
    EXPECT_TRUE(r.converged) << "seed " << seed << " gap " << r.gap;
    ExpectSaddleInvariants(r, cfg);
    EXPECT_EQ(r.lower_bound,
              SeparationGap(r.measurement, s0, s1).min_gap);
    EXPECT_NEAR(TraceDistance(MixtureState(r.best_mu0, s0),
                              MixtureState(r.best_mu1, s1)),
                r.upper_bound, 1e-12);
  }
}

TEST(SolveSaddleTest, NotConvergedWhenRoundsRunOut) {
  SolverConfig cfg;
  cfg.max_rounds = 10;
  const auto [s0, s1] = testing::RandomInstance(3, 3, 3, 1);
  const SaddleResult r = SolveSaddle(s0, s1, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.rounds_used, 10);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace.back().round, 10);
  ExpectSaddleInvariants(r, cfg);
}

TEST(SolveSaddleTest, Deterministic) {
  const auto [s0, s1] = testing::RandomInstance(3, 3, 2, 77);
  const SaddleResult a = SolveSaddle(s0, s1);
  const SaddleResult b = SolveSaddle(s0, s1);
  EXPECT_EQ(a.measurement.matrix(), b.measurement.matrix());
  EXPECT_EQ(a.lower_bound, b.lower_bound);
  EXPECT_EQ(a.upper_bound, b.upper_bound);
  EXPECT_EQ(a.rounds_used, b.rounds_used);
  EXPECT_TRUE(std::ranges::equal(a.mu0.weights(), b.mu0.weights()));
  EXPECT_TRUE(std::ranges::equal(a.mu1.weights(), b.mu1.weights()));
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].lower_bound, b.trace[k].lower_bound);
    EXPECT_EQ(a.trace[k].upper_bound, b.trace[k].upper_bound);
  }
}

TEST(SolveSaddleTest, AddingStatesNeverRaisesUpperBound) {
  SolverConfig cfg;
  cfg.target_gap = 1e-3;
  for (int seed = 0; seed < 8; ++seed) {
    const int dim = 2 + seed % 2;
    const auto [s0, s1] = testing::RandomInstance(dim, 2, 2, 900 + seed);
    std::vector<DensityMatrix> bigger(s0.states().begin(), s0.states().end());
    bigger.push_back(RandomDensity(dim, 1, 12345 + seed));
    const SaddleResult small = SolveSaddle(s0, s1, cfg);
    const SaddleResult large = SolveSaddle(StateSet::Create(bigger), s1, cfg);
    EXPECT_LE(large.upper_bound, small.upper_bound + large.gap + 1e-9);
  }
}

TEST(SolveSaddleTest, ConfigAndShapeErrors) {
  const StateSet s0 = SetOf({Ket0()});
  SolverConfig bad;
  bad.max_rounds = 0;
  EXPECT_THROW(SolveSaddle(s0, s0, bad), Error);
  bad = {};
  bad.target_gap = 0.0;
  EXPECT_THROW(SolveSaddle(s0, s0, bad), Error);
  bad = {};
  bad.learning_rate = -1.0;
  EXPECT_THROW(SolveSaddle(s0, s0, bad), Error);
  bad = {};
  bad.check_interval = 0;
  EXPECT_THROW(SolveSaddle(s0, s0, bad), Error);
  try {
    SolveSaddle(s0, SetOf({testing::MaximallyMixed(3)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(SolveSaddleTest, AutoLearningRate) {
  const auto [s0, s1] = testing::RandomInstance(2, 2, 3, 5);
  SolverConfig cfg;
  cfg.max_rounds = 500;
  EXPECT_DOUBLE_EQ(SolveSaddle(s0, s1, cfg).learning_rate,
                   std::sqrt(8.0 * std::log(6.0) / 500.0));
  cfg.learning_rate = 0.3;
  EXPECT_EQ(SolveSaddle(s0, s1, cfg).learning_rate, 0.3);
}

TEST(MinMixtureDistanceTest, Examples) {
  const MixtureDistance single = MinMixtureDistance(SetOf({Ket0()}), SetOf({KetPlus()}));
  EXPECT_EQ(single.mu0.size(), 1);
  EXPECT_EQ(single.mu0[0], 1.0);
  EXPECT_NEAR(single.distance, TraceDistance(Ket0(), KetPlus()), 1e-15);

  const MixtureDistance overlap =
      MinMixtureDistance(SetOf({Ket0(), Ket1()}), SetOf({testing::MaximallyMixed(2)}));
  EXPECT_NEAR(overlap.mu0[0], 0.5, 1e-12);
  EXPECT_NEAR(overlap.distance, 0.0, 1e-12);

  const MixtureDistance disjoint = MinMixtureDistance(
      SetOf({ValidateDensity(Diag({1, 0, 0})), ValidateDensity(Diag({0, 1, 0}))}),
      SetOf({ValidateDensity(Diag({0, 0, 1}))}));
  EXPECT_NEAR(disjoint.distance, 1.0, 1e-12);
}

TEST(MinMixtureDistanceTest, EqualsSolverUpperBound) {
  const auto [s0, s1] = testing::RandomInstance(3, 3, 3, 8);
  SolverConfig cfg;
  cfg.max_rounds = 2000;
  EXPECT_EQ(MinMixtureDistance(s0, s1, cfg).distance,
            SolveSaddle(s0, s1, cfg).upper_bound);
}

TEST(CertifyForwardTest, HalfIdentityNeverViolates) {
  const auto [s0, s1] = testing::RandomInstance(3, 3, 3, 10);
  const CertReport report = CertifyForward(
      PovmElement::AssumeValid(ComplexMatrix::Identity(3) * 0.5), s0, s1, 200, 1);
  EXPECT_NEAR(report.epsilon_hat, 0.0, 1e-15);
  EXPECT_EQ(report.violations, 0);
  EXPECT_TRUE(report.certified());
}

TEST(CertifyForwardTest, OrthogonalSingletons) {
  const CertReport report =
      CertifyForward(HelstromMeasurement(Ket0(), Ket1()), SetOf({Ket0()}),
                     SetOf({Ket1()}), 50, 2);
  EXPECT_NEAR(report.epsilon_hat, 1.0, 1e-15);
  EXPECT_NEAR(report.min_distance, 1.0, 1e-15);
  EXPECT_TRUE(report.certified());
}

TEST(CertifyForwardTest, SolverMeasurementOnRandomInstance) {
  const auto [s0, s1] = testing::RandomInstance(3, 3, 3, 21);
  SolverConfig cfg;
  cfg.target_gap = 1e-3;
  const SaddleResult r = SolveSaddle(s0, s1, cfg);
  const CertReport report = CertifyForward(r.measurement, s0, s1, 1000, 99);
  EXPECT_EQ(report.trials, 1000);
  EXPECT_LE(report.max_violation, 1e-9);
  EXPECT_EQ(report.violations, 0);
  // No sampled mixture does better than the solver's best.
  EXPECT_GE(report.min_distance, r.upper_bound - r.gap - 1e-9);
}

TEST(CertifyForwardTest, ReportsViolationsOfOutOfRangeOperators) {
  // Valid POVM elements cannot violate. diag(1, -1) is not one and claims a
  // margin of 1 between |0> and |+>, which are only 1/sqrt(2) apart.
  const CertReport report =
      CertifyForward(PovmElement::AssumeValid(Diag({1, -1})), SetOf({Ket0()}),
                     SetOf({KetPlus()}), 10, 3);
  EXPECT_NEAR(report.epsilon_hat, 1.0, 1e-15);
  EXPECT_EQ(report.violations, 10);
  EXPECT_NEAR(report.max_violation, 1.0 - M_SQRT1_2, 1e-12);
  EXPECT_FALSE(report.certified());
}

TEST(CertifyForwardTest, RejectsZeroTrials) {
  EXPECT_THROW(CertifyForward(PovmElement::AssumeValid(Diag({1, 0})),
                              SetOf({Ket0()}), SetOf({Ket1()}), 0, 3),
               Error);
}

TEST(TheoremTest, SeparatingWheneverMixturesStayApart) {
  // If every mixture pair is at least eps apart, the solver's measurement
  // separates at eps up to its gap.
  SolverConfig cfg;
  cfg.target_gap = 1e-3;
  const double step = 0.05;
  int checked = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const int n0 = 1 + seed % 3;
    const int n1 = 1 + (seed / 3) % 3;
    const auto [s0, s1] = testing::RandomInstance(2, n0, n1, 600 + seed);
    const double grid = MixtureGridOracle(s0, s1, step);
    const double eps = grid - step * (n0 + n1);
    if (eps <= 2e-3) continue;
    const SaddleResult r = SolveSaddle(s0, s1, cfg);
    EXPECT_TRUE(IsSeparating(r.measurement, s0, s1, eps - 2e-3)) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 3);
}

}  // namespace
}  // namespace qsep

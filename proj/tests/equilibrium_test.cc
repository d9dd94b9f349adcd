// Copyright 2026 The Onramp Altruism Authors
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

#include "onramp/equilibrium.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "onramp/oracles.h"
#include "test_support.h"

namespace onramp {
namespace {

using testing::Instance;
using testing::MakeInstance;
using testing::CalibratedConfig;

EquilibriumResult Solve(const Instance& inst, double alpha, double beta,
                        double e = 1.0) {
  return SolveEquilibrium(inst.config, inst.derived, inst.summary, alpha, beta,
                          e);
}

TEST(SolveEquilibriumTest, AllSelfishBaseline) {
  const Instance inst = MakeInstance(CalibratedConfig());
  for (double beta : {0.0, 0.5, 1.0, 3.0}) {
    const EquilibriumResult r = Solve(inst, 0.0, beta);
    EXPECT_EQ(r.case_label, EquilibriumCase::kBaseline);
    EXPECT_NEAR(r.x_hat_b, 0.540, 1e-3);
    EXPECT_NEAR(r.x_hat_b, oracles::BisectSelfishIndifference(inst.config),
                1e-10);
  }
}

TEST(SolveEquilibriumTest, FullAltruismReachesOptimum) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const EquilibriumResult r = Solve(inst, 1.0, 1.0);
  EXPECT_NEAR(r.x_hat_b, testing::kCalibratedDelta, 1e-12);
  EXPECT_NEAR(r.social_delay, testing::kCalibratedJOpt, 1e-9);
  EXPECT_EQ(r.case_label, EquilibriumCase::kAltruistsIndifferent);
}

TEST(SolveEquilibriumTest, SaturatedCase) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const EquilibriumResult r = Solve(inst, 0.55, 1.0);
  EXPECT_EQ(r.case_label, EquilibriumCase::kAltruistsSaturated);
  EXPECT_DOUBLE_EQ(r.x_hat_b, 0.55);
  EXPECT_DOUBLE_EQ(r.flow.x_b_altruistic, 0.55);
  EXPECT_DOUBLE_EQ(r.flow.x_b_selfish, 0.0);
}

TEST(SolveEquilibriumTest, SelfishIndifferentCase) {
  const Instance inst = MakeInstance(CalibratedConfig());
  for (double beta : {0.5, 1.0}) {
    const EquilibriumResult r = Solve(inst, 0.3, beta);
    EXPECT_EQ(r.case_label, EquilibriumCase::kSelfishIndifferent);
    EXPECT_EQ(r.x_hat_b, inst.summary.phi);
    EXPECT_DOUBLE_EQ(r.flow.x_b_altruistic, 0.3);
    EXPECT_NEAR(r.flow.x_b_selfish, 0.240, 1e-3);
  }
  EXPECT_STREQ(EquilibriumCaseLabel(Solve(inst, 0.3, 0.5).case_label),
               "case_b");
}

TEST(SolveEquilibriumTest, ZeroLevelCanonicalDecomposition) {
  const Instance inst = MakeInstance(CalibratedConfig());
  for (double alpha : {0.2, 0.5, 0.9}) {
    const EquilibriumResult r = Solve(inst, alpha, 0.0);
    EXPECT_EQ(r.case_label, EquilibriumCase::kBaseline);
    EXPECT_EQ(r.x_hat_b, inst.summary.phi);
    EXPECT_DOUBLE_EQ(r.flow.x_b_altruistic, std::min(alpha, inst.summary.phi));
    EXPECT_NEAR(r.flow.x_b_selfish,
                inst.summary.phi - std::min(alpha, inst.summary.phi), 1e-15);
  }
}

TEST(SolveEquilibriumTest, BoundaryTies) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const double phi = inst.summary.phi;
  EXPECT_EQ(Solve(inst, phi, 1.0).case_label,
            EquilibriumCase::kSelfishIndifferent);
  const double x_dagger = AltruisticIntersection(phi, inst.summary.delta, 1.0);
  const EquilibriumResult r = Solve(inst, x_dagger, 1.0);
  EXPECT_EQ(r.case_label, EquilibriumCase::kAltruistsIndifferent);
  EXPECT_EQ(r.x_hat_b, x_dagger);
}

TEST(SolveEquilibriumTest, RejectsBadParameters) {
  const Instance inst = MakeInstance(CalibratedConfig());
  EXPECT_THROW(Solve(inst, 1.5, 1.0), Error);
  EXPECT_THROW(Solve(inst, -0.1, 1.0), Error);
  EXPECT_THROW(Solve(inst, 0.5, -1.0), Error);
  EXPECT_THROW(Solve(inst, 0.5, 1.0, 0.0), Error);
}

TEST(SolveEquilibriumTest, RequiresMeaningfulSet) {
  const Instance inst = MakeInstance(
      OnRampConfig::Create(0.2, {1.0, 0.0, 1.0, 40.0, 5.0, 0.0}));
  ASSERT_FALSE(inst.summary.in_meaningful_set());
  try {
    Solve(inst, 0.5, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInMeaningfulSet);
  }
}

TEST(SolveEquilibriumTest, UnifiedFormulaAndCaseConsistency) {
  std::mt19937_64 rng(211);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> level(0.0, 2.0);
  std::uniform_real_distribution<double> error(0.25, 4.0);
  for (int i = 0; i < 500; ++i) {
    const Instance inst = testing::RandomMeaningfulInstance(rng);
    const double alpha = unit(rng);
    const double beta = level(rng);
    const double e = error(rng);
    const EquilibriumResult r = Solve(inst, alpha, beta, e);
    const double phi = inst.summary.phi;
    const double x_dagger =
        AltruisticIntersection(phi, inst.summary.delta, beta * e);
    if (alpha > phi && beta * e > 0.0) {
      EXPECT_EQ(r.x_hat_b, std::min(alpha, x_dagger));
    }
    switch (r.case_label) {
      case EquilibriumCase::kBaseline:
      case EquilibriumCase::kSelfishIndifferent:
        EXPECT_EQ(r.x_hat_b, phi);
        break;
      case EquilibriumCase::kAltruistsSaturated:
        EXPECT_EQ(r.x_hat_b, alpha);
        break;
      case EquilibriumCase::kAltruistsIndifferent:
        EXPECT_EQ(r.x_hat_b, x_dagger);
        break;
    }
    EXPECT_TRUE(ValidateFlowDistribution(r.flow, alpha, 1e-12).empty());
    EXPECT_DOUBLE_EQ(r.social_delay,
                     SocialDelay(inst.config, inst.derived, r.x_hat_b));
    const WardropReport report =
        VerifyWardrop(inst.config, inst.derived, r.flow, beta, e, 1e-9);
    EXPECT_TRUE(report.pass) << report.MaxProduct();
  }
}

TEST(SolveEquilibriumTest, DecreaseAndOptimumConsistency) {
  std::mt19937_64 rng(223);
  for (int i = 0; i < 50; ++i) {
    const Instance inst = testing::RandomMeaningfulInstance(rng);
    for (int a = 0; a <= 10; ++a) {
      const double alpha = 0.1 * a;
      for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const EquilibriumResult r = Solve(inst, alpha, beta);
        const AltruismImpact impact =
            ImpactConditions(alpha, beta, inst.summary);
        EXPECT_EQ(impact.decreases_delay,
                  r.social_delay < inst.summary.j_soc_at_phi - 1e-9);
        EXPECT_EQ(impact.reaches_optimum,
                  std::abs(r.social_delay - inst.summary.j_opt) <= 1e-9);
      }
    }
  }
}

TEST(VerifyWardropTest, SelfishBypassBeyondPhiFails) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const double alpha = 0.2;
  FlowDistribution flow{0.0, 1.0 - alpha, alpha, 0.0};
  ASSERT_TRUE(ValidateFlowDistribution(flow, alpha, 1e-12).empty());
  const WardropReport report =
      VerifyWardrop(inst.config, inst.derived, flow, 1.0, 1.0, 1e-9);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.products[1], 0.0);
}

TEST(VerifyWardropTest, AllSteadfastFailsForMeaningfulConfigs) {
  std::mt19937_64 rng(227);
  for (int i = 0; i < 50; ++i) {
    const Instance inst = testing::RandomMeaningfulInstance(rng);
    const DelayProfile at_zero = Delays(inst.derived, 0.0);
    EXPECT_GT(at_zero.j1s, at_zero.j1b);
    const FlowDistribution flow{1.0, 0.0, 0.0, 0.0};
    const WardropReport report =
        VerifyWardrop(inst.config, inst.derived, flow, 1.0, 1.0, 1e-9);
    EXPECT_FALSE(report.pass);
    EXPECT_GT(report.products[0], 1e-9);
  }
}

TEST(BruteForceEquilibriumTest, CalibratedClusterAtDelta) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const auto candidates =
      BruteForceEquilibrium(inst.config, inst.derived, 0.8, 1.0, 1.0, 1e-3);
  ASSERT_FALSE(candidates.empty());
  for (const BruteForceCandidate& c : candidates) {
    EXPECT_NEAR(c.x_hat_b, inst.summary.delta, 1e-3);
    EXPECT_DOUBLE_EQ(c.flow.x_b_selfish, 0.0);
  }
}

TEST(BruteForceEquilibriumTest, ZeroLevelFamily) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const auto candidates =
      BruteForceEquilibrium(inst.config, inst.derived, 0.5, 0.0, 1.0, 1e-3);
  ASSERT_GT(candidates.size(), 10u);
  double min_altruistic = 1.0;
  double max_altruistic = 0.0;
  for (const BruteForceCandidate& c : candidates) {
    EXPECT_NEAR(c.x_hat_b, inst.summary.phi, 1e-3);
    min_altruistic = std::min(min_altruistic, c.flow.x_b_altruistic);
    max_altruistic = std::max(max_altruistic, c.flow.x_b_altruistic);
  }
  // Indifferent altruists: the whole split family is reported.
  EXPECT_LT(min_altruistic, 0.05);
  EXPECT_GT(max_altruistic, 0.45);
}

TEST(BruteForceEquilibriumTest, SingleClassClusterAtPhi) {
  const Instance inst = MakeInstance(CalibratedConfig());
  for (double beta : {0.0, 1.0}) {
    const auto candidates =
        BruteForceEquilibrium(inst.config, inst.derived, 0.0, beta, 1.0, 1e-3);
    ASSERT_FALSE(candidates.empty());
    for (const BruteForceCandidate& c : candidates) {
      EXPECT_NEAR(c.x_hat_b, inst.summary.phi, 1e-3);
    }
  }
}

TEST(BruteForceEquilibriumTest, RejectsBadStep) {
  const Instance inst = MakeInstance(CalibratedConfig());
  EXPECT_THROW(
      BruteForceEquilibrium(inst.config, inst.derived, 0.5, 1.0, 1.0, 0.0),
      Error);
  EXPECT_THROW(
      BruteForceEquilibrium(inst.config, inst.derived, 0.5, 1.0, 1.0, 0.5),
      Error);
}

TEST(BruteForceEquilibriumTest, AgreementAndExclusion) {
  std::mt19937_64 rng(229);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> level(0.0, 2.0);
  constexpr double kStep = 1e-3;
  for (int i = 0; i < 20; ++i) {
    const Instance inst = testing::RandomMeaningfulInstance(rng);
    const double alpha = unit(rng);
    const double beta_e = level(rng);
    const EquilibriumResult r = Solve(inst, alpha, beta_e);
    const auto candidates = BruteForceEquilibrium(
        inst.config, inst.derived, alpha, beta_e, 1.0, kStep);
    ASSERT_FALSE(candidates.empty());
    const double x_dagger =
        AltruisticIntersection(inst.summary.phi, inst.summary.delta, beta_e);
    double nearest = 1.0;
    for (const BruteForceCandidate& c : candidates) {
      EXPECT_LE(std::abs(c.x_hat_b - r.x_hat_b), 2e-3);
      EXPECT_GE(c.x_hat_b, inst.summary.phi - kStep);
      EXPECT_LE(c.x_hat_b, x_dagger + kStep);
      nearest = std::min(nearest, std::abs(c.x_hat_b - r.x_hat_b));
    }
    EXPECT_LE(nearest, kStep);
  }
}

TEST(BestResponseDynamicsTest, CalibratedConvergesToDelta) {
  const Instance inst = MakeInstance(CalibratedConfig());
  DynamicsOptions options;
  options.step_size = 0.5 / (inst.derived.k_s + inst.derived.k_b);
  options.max_iters = 1000000;
  options.record_stride = 1000;
  const DynamicsTrace trace = BestResponseDynamics(
      inst.config, inst.derived, 0.8, 1.0, 1.0, {0.2, 0.0, 0.8, 0.0}, options);
  ASSERT_TRUE(trace.converged);
  EXPECT_NEAR(trace.Final().flow.x_hat_b(), inst.summary.delta, 1e-4);
  EXPECT_TRUE(VerifyWardrop(inst.config, inst.derived, trace.Final().flow, 1.0,
                            1.0, options.tol)
                  .pass);
}

TEST(BestResponseDynamicsTest, FixedPointDoesNotMove) {
  const Instance inst = MakeInstance(CalibratedConfig());
  const double phi = inst.summary.phi;
  const FlowDistribution start{1.0 - phi, phi, 0.0, 0.0};
  const DynamicsTrace trace = BestResponseDynamics(
      inst.config, inst.derived, 0.0, 1.0, 1.0, start, DynamicsOptions{});
  ASSERT_TRUE(trace.converged);
  EXPECT_EQ(trace.Final().iteration, 0u);
  EXPECT_EQ(trace.Final().flow.x_b_selfish, phi);
}

TEST(BestResponseDynamicsTest, UnitStepOscillatesOnSteepConfig) {
  const Instance inst = MakeInstance(
      OnRampConfig::Create(0.5, {1.0, 400.0, 1.0, 0.0, 1.0, 200.0}));
  ASSERT_TRUE(inst.summary.in_meaningful_set());
  DynamicsOptions options;
  options.step_size = 1.0;
  options.max_iters = 200;
  const DynamicsTrace trace = BestResponseDynamics(
      inst.config, inst.derived, 0.0, 0.0, 1.0, {1.0, 0.0, 0.0, 0.0}, options);
  EXPECT_FALSE(trace.converged);
}

TEST(BestResponseDynamicsTest, RandomInstancesFromThreeStarts) {
  std::mt19937_64 rng(233);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> level(0.0, 2.0);
  for (int i = 0; i < 10; ++i) {
    const Instance inst = testing::RandomMeaningfulInstance(rng);
    const double alpha = unit(rng);
    const double beta_e = level(rng);
    const double expected = Solve(inst, alpha, beta_e).x_hat_b;
    DynamicsOptions options;
    options.step_size =
        1.0 / ((1.0 + beta_e) * (inst.derived.k_s + inst.derived.k_b));
    options.max_iters = 1000000;
    options.record_stride = 100000;
    for (const FlowDistribution& start :
         {FlowDistribution{1.0 - alpha, 0.0, alpha, 0.0},
          FlowDistribution{0.0, 1.0 - alpha, 0.0, alpha},
          FlowDistribution{0.5 * (1.0 - alpha), 0.5 * (1.0 - alpha),
                           0.5 * alpha, 0.5 * alpha}}) {
      const DynamicsTrace trace = BestResponseDynamics(
          inst.config, inst.derived, alpha, beta_e, 1.0, start, options);
      ASSERT_TRUE(trace.converged);
      EXPECT_NEAR(trace.Final().flow.x_hat_b(), expected, 1e-4);
    }
  }
}

TEST(BestResponseDynamicsTest, RejectsInfeasibleStart) {
  const Instance inst = MakeInstance(CalibratedConfig());
  EXPECT_THROW(BestResponseDynamics(inst.config, inst.derived, 0.5, 1.0, 1.0,
                                    {1.0, 0.0, 0.0, 0.0}, DynamicsOptions{}),
               Error);
}

}  // namespace
}  // namespace onramp

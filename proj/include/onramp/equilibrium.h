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

#ifndef ONRAMP_EQUILIBRIUM_H_
#define ONRAMP_EQUILIBRIUM_H_

#include <array>
#include <cstddef>
#include <vector>

#include "onramp/analysis.h"
#include "onramp/model.h"

namespace onramp {

// Which regime the mixed equilibrium falls in.
enum class EquilibriumCase {
  kBaseline,               // no effective altruism (alpha == 0 or beta*e == 0)
  kSelfishIndifferent,     // bypass total stays at phi; alpha <= phi
  kAltruistsSaturated,     // every altruist bypasses; bypass total == alpha
  kAltruistsIndifferent,   // altruists split; bypass total == intersection
};

// CSV / CLI label: baseline, case_b, case_c, case_d.
const char* EquilibriumCaseLabel(EquilibriumCase c);

struct EquilibriumResult {
  FlowDistribution flow;
  double x_hat_b = 0.0;
  EquilibriumCase case_label = EquilibriumCase::kBaseline;
  DelayProfile delays;
  double social_delay = 0.0;
};

// Total bypass proportion at the equilibrium for effective level beta_e.
// Requires a summary in the meaningful set; no validation is performed.
double EquilibriumBypassFlow(const AnalysisSummary& summary, double alpha,
                             double beta_e);

EquilibriumResult SolveEquilibrium(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   const AnalysisSummary& summary,
                                   double alpha, double beta, double e);

// The four complementarity products of the choice-equilibrium conditions:
//   [0] x_s_selfish    * (steadfast delay - bypass delay)
//   [1] x_b_selfish    * (bypass delay - steadfast delay)
//   [2] x_s_altruistic * (perceived steadfast - perceived bypass)
//   [3] x_b_altruistic * (perceived bypass - perceived steadfast)
struct WardropReport {
  std::array<double, 4> products{};
  double tolerance = 0.0;
  bool pass = false;

  double MaxProduct() const;
};

WardropReport VerifyWardrop(const OnRampConfig& config,
                            const DerivedCoefficients& derived,
                            const FlowDistribution& flow, double beta,
                            double e, double tol);

struct BruteForceCandidate {
  FlowDistribution flow;
  double x_hat_b = 0.0;
  WardropReport report;
};

// Enumerates (x_b_selfish, x_b_altruistic) on a grid with spacing
// `grid_step` (interval endpoints always included) and keeps each point where
// every complementarity product is at most
//   mass_on_that_option * gap_slope_of_its_class * grid_step,
// i.e. every occupied option is within one grid step of indifference.
// Independent of the closed-form solver.
std::vector<BruteForceCandidate> BruteForceEquilibrium(
    const OnRampConfig& config, const DerivedCoefficients& derived,
    double alpha, double beta, double e, double grid_step);

struct DynamicsOptions {
  double step_size = 0.05;
  std::size_t max_iters = 100000;
  double tol = 1e-12;
  // Record every n-th iterate; the first and last are always kept.
  std::size_t record_stride = 1;
};

struct DynamicsStep {
  std::size_t iteration = 0;
  FlowDistribution flow;
  double max_weighted_gap = 0.0;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  bool converged = false;

  const DynamicsStep& Final() const { return steps.back(); }
};

// Aggregate revision dynamics: each iteration, a fraction
// min(1, step_size * gap) of each class's mass on its costlier option moves
// to the cheaper one. Stops once both classes' mass-weighted gaps are below
// `tol`. The fixed points are exactly the choice equilibria.
DynamicsTrace BestResponseDynamics(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   double alpha, double beta, double e,
                                   const FlowDistribution& initial,
                                   const DynamicsOptions& options);

}  // namespace onramp

#endif  // ONRAMP_EQUILIBRIUM_H_

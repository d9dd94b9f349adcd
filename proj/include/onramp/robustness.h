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

#ifndef ONRAMP_ROBUSTNESS_H_
#define ONRAMP_ROBUSTNESS_H_

#include <optional>
#include <vector>

#include "onramp/analysis.h"
#include "onramp/model.h"

namespace onramp {

struct WorstCasePoint {
  double e = 0.0;
  double alpha = 0.0;
  double x_hat_b = 0.0;
  double social_delay = 0.0;
};

struct WorstCase {
  double social_delay = 0.0;
  std::vector<WorstCasePoint> points;  // every evaluated point attaining it
};

// Supremum of the equilibrium social delay over e in [e_L, e_U] and
// alpha in [delta, 1]. The bypass total is nondecreasing in alpha and in e,
// and the social delay is convex in it, so the sup is attained at alpha = 1
// and at one of the two error endpoints.
WorstCase WorstCaseSocialDelay(const OnRampConfig& config,
                               const DerivedCoefficients& derived,
                               const AnalysisSummary& summary, double beta,
                               const ErrorInterval& interval);

// Worst-case social delay divided by the optimum over [0, 1].
double PriceOfAnarchy(const OnRampConfig& config,
                      const DerivedCoefficients& derived,
                      const AnalysisSummary& summary, double beta,
                      const ErrorInterval& interval);

// Effective level at which the altruistic intersection reaches `alpha`:
// (alpha - phi) / (2 delta - phi - alpha). Throws kOutOfRegime when the
// denominator is not positive.
double TransitionBeta(double alpha, double phi, double delta);

enum class BetaStarBranch {
  // 1 / (e_L * pi): equalizes the lower error bound with the saturation point.
  kTransitionEqualizing,
  // 1 / sqrt(e_L * e_U): equalizes the two error bounds.
  kGeometricMean,
};

const char* BetaStarBranchName(BetaStarBranch b);

struct RobustnessSummary {
  double poa = 0.0;
  double beta_star = 0.0;
  BetaStarBranch branch = BetaStarBranch::kGeometricMean;
  std::optional<double> transition_beta_at_full_ratio;  // pi, when pi > 0
  std::vector<WorstCasePoint> worst_case_points;
};

// Altruism level minimizing the price of anarchy over the error interval.
RobustnessSummary OptimalAltruismLevel(const OnRampConfig& config,
                                       const DerivedCoefficients& derived,
                                       const AnalysisSummary& summary,
                                       const ErrorInterval& interval);

// Grid-evaluated price of anarchy: the sup is taken over an e grid on
// [e_L, e_U] and an alpha grid on [delta, 1] with spacing `inner_step`,
// both endpoints included.
double GridPriceOfAnarchy(const OnRampConfig& config,
                          const DerivedCoefficients& derived,
                          const AnalysisSummary& summary, double beta,
                          const ErrorInterval& interval, double inner_step);

struct GridBetaResult {
  double beta = 0.0;  // smallest grid level attaining the minimum
  double poa = 0.0;   // grid price of anarchy there
  std::size_t evaluated = 0;
};

// Brute-force minimizer of GridPriceOfAnarchy over beta = k * beta_step,
// k >= 1, up to 2 / e_L.
GridBetaResult GridOptimalBeta(const OnRampConfig& config,
                               const DerivedCoefficients& derived,
                               const AnalysisSummary& summary,
                               const ErrorInterval& interval, double beta_step,
                               double inner_step);

// Bound on how far GridPriceOfAnarchy at level `beta` can fall below
// PriceOfAnarchy for the given inner step: the largest change of the bypass
// total across one grid cell times max |J'| on [0, 1], over J_opt.
double GridSlack(const DerivedCoefficients& derived,
                 const AnalysisSummary& summary, double beta,
                 double inner_step);

}  // namespace onramp

#endif  // ONRAMP_ROBUSTNESS_H_

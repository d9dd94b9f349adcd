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

#include "onramp/robustness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "onramp/equilibrium.h"

namespace onramp {
namespace {

void RequireMeaningful(const AnalysisSummary& summary) {
  if (!summary.in_meaningful_set()) {
    throw Error(ErrorKind::kNotInMeaningfulSet,
                "configuration is outside the meaningful set: " +
                    summary.membership.reason);
  }
}

void RequireLevel(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "altruism level must be finite and >= 0, got " << beta;
    throw Error(ErrorKind::kInvalidPopulation, msg.str());
  }
}

double RequireOptimum(const AnalysisSummary& summary) {
  if (!(summary.j_opt > 0.0)) {
    throw Error(ErrorKind::kZeroOptimum,
                "optimal social delay is zero; the ratio is undefined");
  }
  return summary.j_opt;
}

std::vector<double> ClosedGrid(double lower, double upper, double step) {
  std::vector<double> values;
  const auto n =
      static_cast<std::size_t>(std::floor((upper - lower) / step + 1e-9));
  values.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    values.push_back(std::min(upper, lower + static_cast<double>(i) * step));
  }
  if (upper - values.back() > 1e-12) values.push_back(upper);
  return values;
}

}  // namespace

WorstCase WorstCaseSocialDelay(const OnRampConfig& config,
                               const DerivedCoefficients& derived,
                               const AnalysisSummary& summary, double beta,
                               const ErrorInterval& interval) {
  RequireMeaningful(summary);
  RequireLevel(beta);

  std::vector<WorstCasePoint> candidates;
  for (double e : {interval.lower(), interval.upper()}) {
    const double x = EquilibriumBypassFlow(summary, 1.0, beta * e);
    candidates.push_back({e, 1.0, x, SocialDelay(config, derived, x)});
    if (interval.lower() == interval.upper()) break;
  }

  WorstCase worst;
  for (const auto& c : candidates) {
    worst.social_delay = std::max(worst.social_delay, c.social_delay);
  }
  const double tie = 1e-12 * std::max(1.0, std::abs(worst.social_delay));
  for (const auto& c : candidates) {
    if (c.social_delay >= worst.social_delay - tie) worst.points.push_back(c);
  }
  return worst;
}

double PriceOfAnarchy(const OnRampConfig& config,
                      const DerivedCoefficients& derived,
                      const AnalysisSummary& summary, double beta,
                      const ErrorInterval& interval) {
  const WorstCase worst =
      WorstCaseSocialDelay(config, derived, summary, beta, interval);
  return worst.social_delay / RequireOptimum(summary);
}

double TransitionBeta(double alpha, double phi, double delta) {
  const double denominator = 2.0 * delta - phi - alpha;
  if (!(denominator > 0.0)) {
    std::ostringstream msg;
    msg << "no transition level: 2*delta - phi - alpha = " << denominator
        << " is not positive";
    throw Error(ErrorKind::kOutOfRegime, msg.str());
  }
  return (alpha - phi) / denominator;
}

const char* BetaStarBranchName(BetaStarBranch b) {
  switch (b) {
    case BetaStarBranch::kTransitionEqualizing: return "transition_equalizing";
    case BetaStarBranch::kGeometricMean: return "geometric_mean";
  }
  return "unknown";
}

RobustnessSummary OptimalAltruismLevel(const OnRampConfig& config,
                                       const DerivedCoefficients& derived,
                                       const AnalysisSummary& summary,
                                       const ErrorInterval& interval) {
  RequireMeaningful(summary);
  RobustnessSummary r;
  const Classification cls = Classify(summary, interval);
  if (cls.config_class == ConfigClass::kTransitionLimited) {
    r.beta_star = 1.0 / (interval.lower() * *summary.pi);
    r.branch = BetaStarBranch::kTransitionEqualizing;
  } else {
    r.beta_star = 1.0 / std::sqrt(interval.lower() * interval.upper());
    r.branch = BetaStarBranch::kGeometricMean;
  }
  if (summary.pi && *summary.pi > 0.0) {
    r.transition_beta_at_full_ratio = *summary.pi;
  }
  const WorstCase worst =
      WorstCaseSocialDelay(config, derived, summary, r.beta_star, interval);
  r.poa = worst.social_delay / RequireOptimum(summary);
  r.worst_case_points = worst.points;
  return r;
}

double GridPriceOfAnarchy(const OnRampConfig& config,
                          const DerivedCoefficients& derived,
                          const AnalysisSummary& summary, double beta,
                          const ErrorInterval& interval, double inner_step) {
  RequireMeaningful(summary);
  RequireLevel(beta);
  if (!(inner_step > 0.0)) {
    throw Error(ErrorKind::kDomain, "inner grid step must be positive");
  }
  const double j_opt = RequireOptimum(summary);
  const std::vector<double> errors =
      ClosedGrid(interval.lower(), interval.upper(), inner_step);
  const std::vector<double> ratios = ClosedGrid(
      summary.optimal_interval.lower, summary.optimal_interval.upper,
      inner_step);
  double sup = 0.0;
  for (double e : errors) {
    for (double alpha : ratios) {
      const double x = EquilibriumBypassFlow(summary, alpha, beta * e);
      sup = std::max(sup, SocialDelay(config, derived, x));
    }
  }
  return sup / j_opt;
}

GridBetaResult GridOptimalBeta(const OnRampConfig& config,
                               const DerivedCoefficients& derived,
                               const AnalysisSummary& summary,
                               const ErrorInterval& interval, double beta_step,
                               double inner_step) {
  if (!(beta_step > 0.0)) {
    throw Error(ErrorKind::kDomain, "beta grid step must be positive");
  }
  const double beta_max = 2.0 / interval.lower();
  const auto n =
      static_cast<std::size_t>(std::floor(beta_max / beta_step + 1e-9));
  GridBetaResult best;
  best.poa = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= n; ++k) {
    const double beta = static_cast<double>(k) * beta_step;
    const double poa = GridPriceOfAnarchy(config, derived, summary, beta,
                                          interval, inner_step);
    if (poa < best.poa) {
      best.poa = poa;
      best.beta = beta;
    }
    ++best.evaluated;
  }
  return best;
}

double GridSlack(const DerivedCoefficients& derived,
                 const AnalysisSummary& summary, double beta,
                 double inner_step) {
  const double j_opt = RequireOptimum(summary);
  // The social delay is quadratic with curvature k_s + k_b about delta.
  const double curvature = derived.k_s + derived.k_b;
  const double max_slope =
      2.0 * curvature *
      std::max(std::abs(summary.delta), std::abs(1.0 - summary.delta));
  // d(intersection)/d(beta*e) = 2 (delta - phi) / (1 + beta*e)^2 <= 2 (delta - phi).
  const double flow_per_cell = std::max(
      1.0, 2.0 * beta * std::abs(summary.delta - summary.phi)) * inner_step;
  return max_slope * flow_per_cell / j_opt;
}

}  // namespace onramp

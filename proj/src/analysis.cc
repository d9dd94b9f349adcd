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

#include "onramp/analysis.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace onramp {
namespace {

constexpr double kSingularPiTolerance = 1e-14;

void RequireMeaningful(const AnalysisSummary& summary) {
  if (!summary.in_meaningful_set()) {
    throw Error(ErrorKind::kNotInMeaningfulSet,
                "configuration is outside the meaningful set: " +
                    summary.membership.reason);
  }
}

}  // namespace

ErrorInterval ErrorInterval::Create(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower > 0.0) ||
      !(lower <= upper)) {
    std::ostringstream msg;
    msg << "error interval needs 0 < e_lower <= e_upper, got [" << lower
        << ", " << upper << "]";
    throw Error(ErrorKind::kInvalidInterval, msg.str());
  }
  return ErrorInterval(lower, upper);
}

double SelfishEquilibriumFlow(const DerivedCoefficients& d) {
  const double slope = d.k_s + d.k_b;
  if (!(slope > 0.0)) {
    throw Error(ErrorKind::kDegenerateConfig,
                "k_s + k_b must be positive to locate the selfish equilibrium");
  }
  return (d.k_s + d.b_s - d.b_b) / slope;
}

SocialOptimum ComputeSocialOptimum(const OnRampConfig& config,
                                   const DerivedCoefficients& d) {
  // With x the bypass proportion the social delay is
  //   (1-x)(k_s(1-x)+b_s) + x(k_b x+b_b) + n0(k_s(1-x)+b_s) + n2(k2 x+b_b),
  // whose x^2 coefficient is k_s + k_b. Setting the derivative
  //   -2 k_s (1-x) - b_s + 2 k_b x + b_b - n0 k_s + n2 k2
  // to zero gives the stationary point below.
  const double curvature = d.k_s + d.k_b;
  if (!(curvature > 0.0)) {
    throw Error(ErrorKind::kDegenerateConfig,
                "social delay is not strictly convex (k_s + k_b == 0)");
  }
  const double n0 = config.flows().n0();
  const double n2 = config.flows().n2();
  SocialOptimum opt;
  opt.delta = (2.0 * d.k_s + d.b_s - d.b_b + n0 * d.k_s - n2 * d.k2) /
              (2.0 * curvature);
  opt.j_opt = SocialDelay(config, d, std::clamp(opt.delta, 0.0, 1.0));
  return opt;
}

double AltruisticIntersection(double phi, double delta, double beta_e) {
  return ((1.0 - beta_e) * phi + 2.0 * beta_e * delta) / (1.0 + beta_e);
}

double PiValue(double phi, double delta) {
  const double denominator = 2.0 * delta - phi - 1.0;
  if (std::abs(denominator) <= kSingularPiTolerance) {
    throw Error(ErrorKind::kSingularPi,
                "2*delta - phi - 1 vanishes; pi is undefined");
  }
  return (1.0 - phi) / denominator;
}

AnalysisSummary Analyze(const OnRampConfig& config,
                        const DerivedCoefficients& derived) {
  AnalysisSummary s;
  s.phi = SelfishEquilibriumFlow(derived);
  const SocialOptimum opt = ComputeSocialOptimum(config, derived);
  s.delta = opt.delta;
  s.j_opt = opt.j_opt;
  s.j_soc_at_phi = SocialDelay(config, derived, s.phi);
  try {
    s.pi = PiValue(s.phi, s.delta);
  } catch (const Error&) {
    s.pi.reset();
  }

  if (!(s.phi > 0.0)) {
    s.membership = {false, "Phi <= 0"};
  } else if (!(s.phi < s.delta)) {
    s.membership = {false, "Phi >= Delta"};
  } else if (!(s.delta < 1.0)) {
    s.membership = {false, "Delta >= 1"};
  } else {
    s.membership = {true, ""};
  }

  s.decrease_interval = {s.phi, 1.0, true, false};
  s.optimal_interval = {std::clamp(s.delta, 0.0, 1.0), 1.0, false, false};
  return s;
}

const char* ConfigClassName(ConfigClass c) {
  switch (c) {
    case ConfigClass::kNotInMeaningfulSet: return "not_in_G";
    case ConfigClass::kTransitionLimited: return "G1";
    case ConfigClass::kGeometricMean: return "G2";
  }
  return "unknown";
}

Classification Classify(const AnalysisSummary& summary,
                        const ErrorInterval& interval) {
  if (!summary.in_meaningful_set()) {
    return {ConfigClass::kNotInMeaningfulSet, summary.membership.reason};
  }
  const double threshold = std::sqrt(interval.upper() / interval.lower());
  // A singular pi falls back to the pi < 0 behaviour.
  if (summary.pi && *summary.pi > 0.0 && *summary.pi < threshold) {
    return {ConfigClass::kTransitionLimited, ""};
  }
  return {ConfigClass::kGeometricMean, ""};
}

Classification Classify(const OnRampConfig& config,
                        const DerivedCoefficients& derived,
                        const ErrorInterval& interval) {
  return Classify(Analyze(config, derived), interval);
}

AltruismImpact ImpactConditions(double alpha, double beta,
                                const AnalysisSummary& summary) {
  RequireMeaningful(summary);
  AltruismImpact impact;
  impact.decreases_delay = beta > 0.0 && summary.decrease_interval.Contains(alpha);
  impact.reaches_optimum = beta == 1.0 && summary.optimal_interval.Contains(alpha);
  return impact;
}

}  // namespace onramp

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

#include "onramp/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace onramp {
namespace {

// Flows computed as sums of proportions can land an ulp outside [0, 1].
constexpr double kProportionSlack = 1e-12;

void RequireNonNegative(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream msg;
    msg << "coefficient '" << name << "' must be a finite non-negative number,"
        << " got " << value;
    throw Error(ErrorKind::kInvalidConfig, msg.str());
  }
}

double CheckedProportion(double x_hat_b) {
  if (!(x_hat_b >= -kProportionSlack && x_hat_b <= 1.0 + kProportionSlack)) {
    std::ostringstream msg;
    msg << "bypass proportion " << x_hat_b << " is outside [0, 1]";
    throw Error(ErrorKind::kDomain, msg.str());
  }
  return std::clamp(x_hat_b, 0.0, 1.0);
}

}  // namespace

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidConfig: return "invalid-config";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kDegenerateConfig: return "degenerate-config";
    case ErrorKind::kSingularPi: return "singular-pi";
    case ErrorKind::kNotInMeaningfulSet: return "not-in-G";
    case ErrorKind::kInvalidPopulation: return "invalid-population";
    case ErrorKind::kOutOfRegime: return "out-of-regime";
    case ErrorKind::kZeroOptimum: return "zero-optimum";
    case ErrorKind::kInvalidInterval: return "invalid-interval";
  }
  return "unknown";
}

NeighborFlows NeighborFlows::FromOnRampFlow(double n0) {
  if (!std::isfinite(n0) || n0 < 0.0 || n0 > 1.0) {
    std::ostringstream msg;
    msg << "on-ramp flow n0 must lie in [0, 1], got " << n0;
    throw Error(ErrorKind::kInvalidConfig, msg.str());
  }
  return NeighborFlows(n0, 1.0 - n0);
}

OnRampConfig OnRampConfig::Create(double n0, const CostCoefficients& costs) {
  NeighborFlows flows = NeighborFlows::FromOnRampFlow(n0);
  RequireNonNegative("c1t", costs.c1t);
  RequireNonNegative("c1m", costs.c1m);
  RequireNonNegative("c2t", costs.c2t);
  RequireNonNegative("c2m", costs.c2m);
  RequireNonNegative("mu", costs.mu);
  RequireNonNegative("gamma", costs.gamma);
  return OnRampConfig(flows, costs);
}

DerivedCoefficients DeriveCoefficients(const OnRampConfig& config) {
  const CostCoefficients& c = config.costs();
  const double n0 = config.flows().n0();
  const double n2 = config.flows().n2();
  DerivedCoefficients d;
  d.k_s = c.c1t * c.mu + c.c1m * n0;
  d.b_s = c.c1t * c.mu * n0;
  d.k_b = c.c2t * c.gamma + c.c2m * n2;
  d.b_b = c.c2t * n2;
  d.k2 = c.c2t + c.c2m * n2;
  return d;
}

void PopulationParams::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "altruistic ratio must lie in [0, 1], got " << alpha;
    throw Error(ErrorKind::kInvalidPopulation, msg.str());
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "altruism level must be finite and >= 0, got " << beta;
    throw Error(ErrorKind::kInvalidPopulation, msg.str());
  }
}

DelayProfile Delays(const DerivedCoefficients& derived, double x_hat_b) {
  const double x = CheckedProportion(x_hat_b);
  DelayProfile p;
  p.j1s = derived.k_s * (1.0 - x) + derived.b_s;
  p.j1b = derived.k_b * x + derived.b_b;
  p.j0 = p.j1s;
  p.j2 = derived.k2 * x + derived.b_b;
  return p;
}

double SocialDelay(const OnRampConfig& config,
                   const DerivedCoefficients& derived, double x_hat_b) {
  const double x = x_hat_b;
  const double j1s = derived.k_s * (1.0 - x) + derived.b_s;
  const double j1b = derived.k_b * x + derived.b_b;
  const double j2 = derived.k2 * x + derived.b_b;
  return (1.0 - x) * j1s + x * j1b + config.flows().n0() * j1s +
         config.flows().n2() * j2;
}

AltruisticCostPair AltruisticCosts(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   double x_hat_b, double beta, double e) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    std::ostringstream msg;
    msg << "error factor must be finite and > 0, got " << e;
    throw Error(ErrorKind::kDomain, msg.str());
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "altruism level must be finite and >= 0, got " << beta;
    throw Error(ErrorKind::kDomain, msg.str());
  }
  const double x = CheckedProportion(x_hat_b);
  const double beta_e = beta * e;
  const DelayProfile delays = Delays(derived, x);
  AltruisticCostPair costs;
  costs.steadfast_cost =
      delays.j1s + beta_e * derived.k_s * ((1.0 - x) + config.flows().n0());
  costs.bypass_cost =
      delays.j1b +
      beta_e * (derived.k_b * x + derived.k2 * config.flows().n2());
  return costs;
}

std::vector<FlowViolation> ValidateFlowDistribution(const FlowDistribution& x,
                                                    double alpha, double tol) {
  std::vector<FlowViolation> violations;
  const double selfish = x.x_s_selfish + x.x_b_selfish - (1.0 - alpha);
  if (std::abs(selfish) > tol) {
    violations.push_back({"selfish mass equals 1 - alpha", selfish});
  }
  const double altruistic = x.x_s_altruistic + x.x_b_altruistic - alpha;
  if (std::abs(altruistic) > tol) {
    violations.push_back({"altruistic mass equals alpha", altruistic});
  }
  const struct {
    const char* name;
    double value;
  } components[] = {
      {"x_s_selfish >= 0", x.x_s_selfish},
      {"x_b_selfish >= 0", x.x_b_selfish},
      {"x_s_altruistic >= 0", x.x_s_altruistic},
      {"x_b_altruistic >= 0", x.x_b_altruistic},
  };
  for (const auto& c : components) {
    if (c.value < -tol) violations.push_back({c.name, c.value});
  }
  return violations;
}

}  // namespace onramp

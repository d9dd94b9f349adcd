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

#ifndef ONRAMP_MODEL_H_
#define ONRAMP_MODEL_H_

#include <string>
#include <vector>

#include "onramp/error.h"

namespace onramp {

// Default absolute tolerance for equality-style checks on delays and flows.
inline constexpr double kEqualityTolerance = 1e-9;

// Normalized flows on the on-ramp (lane 0) and the far mainline lane (lane 2).
// Only n0 is supplied; n2 = 1 - n0.
class NeighborFlows {
 public:
  static NeighborFlows FromOnRampFlow(double n0);

  double n0() const { return n0_; }
  double n2() const { return n2_; }

 private:
  NeighborFlows(double n0, double n2) : n0_(n0), n2_(n2) {}

  double n0_;
  double n2_;
};

// Calibrated delay-model coefficients of one on-ramp. All non-negative.
struct CostCoefficients {
  double c1t = 0.0;
  double c1m = 0.0;
  double c2t = 0.0;
  double c2m = 0.0;
  double mu = 0.0;     // merge amplification
  double gamma = 0.0;  // lane-change amplification
};

// Full on-ramp configuration: neighboring flows plus cost coefficients.
// Construction validates both; instances are immutable.
class OnRampConfig {
 public:
  static OnRampConfig Create(double n0, const CostCoefficients& costs);

  const NeighborFlows& flows() const { return flows_; }
  const CostCoefficients& costs() const { return costs_; }

 private:
  OnRampConfig(NeighborFlows flows, CostCoefficients costs)
      : flows_(flows), costs_(costs) {}

  NeighborFlows flows_;
  CostCoefficients costs_;
};

// Affine delay constants. With x the total bypass proportion:
//   steadfast delay  = k_s (1 - x) + b_s
//   bypass delay     = k_b x + b_b
//   lane-2 delay     = k2 x + b_b
struct DerivedCoefficients {
  double k_s = 0.0;
  double b_s = 0.0;
  double k_b = 0.0;
  double b_b = 0.0;
  double k2 = 0.0;
};

DerivedCoefficients DeriveCoefficients(const OnRampConfig& config);

// Lane-1 flow split into (selfish, altruistic) x (steadfast, bypass).
struct FlowDistribution {
  double x_s_selfish = 0.0;
  double x_b_selfish = 0.0;
  double x_s_altruistic = 0.0;
  double x_b_altruistic = 0.0;

  double x_hat_s() const { return x_s_selfish + x_s_altruistic; }
  double x_hat_b() const { return x_b_selfish + x_b_altruistic; }
};

struct PopulationParams {
  double alpha = 0.0;  // altruistic ratio, [0, 1]
  double beta = 0.0;   // altruism level, >= 0

  // Throws kInvalidPopulation when out of range.
  void Validate() const;
};

struct DelayProfile {
  double j1s = 0.0;  // lane-1 steadfast
  double j1b = 0.0;  // lane-1 bypass
  double j0 = 0.0;   // on-ramp
  double j2 = 0.0;   // lane 2
};

struct AltruisticCostPair {
  double steadfast_cost = 0.0;
  double bypass_cost = 0.0;
};

// Travel delays at total bypass proportion `x_hat_b` in [0, 1].
DelayProfile Delays(const DerivedCoefficients& derived, double x_hat_b);

// Flow-weighted total delay over lane 1, the on-ramp and lane 2. Accepts any
// real `x_hat_b`; outside [0, 1] the delays are extended affinely.
double SocialDelay(const OnRampConfig& config,
                   const DerivedCoefficients& derived, double x_hat_b);

// Costs perceived by altruistic vehicles: travel delay plus `beta * e` times
// the marginal social cost of the option. Only the product beta * e matters.
AltruisticCostPair AltruisticCosts(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   double x_hat_b, double beta, double e);

struct FlowViolation {
  std::string constraint;
  double residual = 0.0;
};

// Checks the class-mass and non-negativity constraints for altruistic ratio
// `alpha`. Returns every violated constraint; empty means feasible.
std::vector<FlowViolation> ValidateFlowDistribution(const FlowDistribution& x,
                                                    double alpha, double tol);

}  // namespace onramp

#endif  // ONRAMP_MODEL_H_

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

#ifndef ONRAMP_ANALYSIS_H_
#define ONRAMP_ANALYSIS_H_

#include <optional>
#include <string>

#include "onramp/model.h"

namespace onramp {

// Multiplicative error bounds on the perceived marginal-cost term.
// 0 < lower <= upper; lower == upper is the no-uncertainty case.
class ErrorInterval {
 public:
  static ErrorInterval Create(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  ErrorInterval(double lower, double upper) : lower_(lower), upper_(upper) {}

  double lower_;
  double upper_;
};

struct RealInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_open = false;
  bool upper_open = false;

  bool Contains(double v) const {
    const bool above = lower_open ? v > lower : v >= lower;
    const bool below = upper_open ? v < upper : v <= upper;
    return above && below;
  }
};

// Membership in the set of configurations where 0 < phi < delta < 1, i.e.
// where altruism can strictly lower the social delay.
struct SetMembership {
  bool in_meaningful_set = false;
  std::string reason;  // empty when in_meaningful_set
};

struct AnalysisSummary {
  double phi = 0.0;
  double delta = 0.0;
  std::optional<double> pi;  // unset when 2*delta - phi - 1 == 0
  double j_opt = 0.0;
  double j_soc_at_phi = 0.0;
  SetMembership membership;
  RealInterval decrease_interval;  // (phi, 1]
  RealInterval optimal_interval;   // [delta, 1]

  bool in_meaningful_set() const { return membership.in_meaningful_set; }
};

// Total bypass proportion at which the selfish steadfast and bypass delays
// are equal. Throws kDegenerateConfig when k_s + k_b == 0.
double SelfishEquilibriumFlow(const DerivedCoefficients& derived);

struct SocialOptimum {
  double delta = 0.0;  // unconstrained minimizer over the reals
  double j_opt = 0.0;  // minimum over [0, 1]
};

SocialOptimum ComputeSocialOptimum(const OnRampConfig& config,
                                   const DerivedCoefficients& derived);

// Bypass proportion at which the two perceived altruistic costs meet, for
// effective altruism level `beta_e` = beta * e. Equals phi at 0, delta at 1
// and tends to 2*delta - phi as beta_e grows.
double AltruisticIntersection(double phi, double delta, double beta_e);

// (1 - phi) / (2 delta - phi - 1). Throws kSingularPi on a zero denominator.
double PiValue(double phi, double delta);

AnalysisSummary Analyze(const OnRampConfig& config,
                        const DerivedCoefficients& derived);

enum class ConfigClass {
  kNotInMeaningfulSet,
  // 0 < pi < sqrt(e_U / e_L): the worst case saturates at full bypass.
  kTransitionLimited,
  // Everything else in the meaningful set.
  kGeometricMean,
};

struct Classification {
  ConfigClass config_class = ConfigClass::kNotInMeaningfulSet;
  std::string reason;
};

const char* ConfigClassName(ConfigClass c);

Classification Classify(const AnalysisSummary& summary,
                        const ErrorInterval& interval);
Classification Classify(const OnRampConfig& config,
                        const DerivedCoefficients& derived,
                        const ErrorInterval& interval);

struct AltruismImpact {
  bool decreases_delay = false;
  bool reaches_optimum = false;
};

// Whether altruistic ratio `alpha` at level `beta` strictly lowers the
// all-selfish social delay, and whether it reaches the optimum.
// Throws kNotInMeaningfulSet when the summary is outside the set.
AltruismImpact ImpactConditions(double alpha, double beta,
                                const AnalysisSummary& summary);

}  // namespace onramp

#endif  // ONRAMP_ANALYSIS_H_

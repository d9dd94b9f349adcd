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

#ifndef ONRAMP_ORACLES_H_
#define ONRAMP_ORACLES_H_

#include "onramp/model.h"

namespace onramp::oracles {

// Numerical cross-checks for the closed forms. These evaluate the delay
// models from the raw cost coefficients and never touch the derived
// constants or the closed-form expressions.

// Lane-1 steadfast and bypass delays, social delay, from raw coefficients.
double RawSteadfastDelay(const OnRampConfig& config, double x_hat_b);
double RawBypassDelay(const OnRampConfig& config, double x_hat_b);
double RawSocialDelay(const OnRampConfig& config, double x_hat_b);

// Root of steadfast - bypass delay on [lower, upper] by bisection.
// Throws kDegenerateConfig when the bracket holds no sign change.
double BisectSelfishIndifference(const OnRampConfig& config,
                                 double lower = -1.0, double upper = 2.0,
                                 double tol = 1e-13);

// Grid point in [lower, upper] with the smallest raw social delay.
double GridScanSocialMinimizer(const OnRampConfig& config, double lower,
                               double upper, double step);

}  // namespace onramp::oracles

#endif  // ONRAMP_ORACLES_H_

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

#include "onramp/oracles.h"

#include <cmath>
#include <cstddef>

namespace onramp::oracles {

double RawSteadfastDelay(const OnRampConfig& config, double x_hat_b) {
  const CostCoefficients& c = config.costs();
  const double n0 = config.flows().n0();
  const double x_hat_s = 1.0 - x_hat_b;
  return c.c1t * c.mu * (x_hat_s + n0) + c.c1m * x_hat_s * n0;
}

double RawBypassDelay(const OnRampConfig& config, double x_hat_b) {
  const CostCoefficients& c = config.costs();
  const double n2 = config.flows().n2();
  return c.c2t * (c.gamma * x_hat_b + n2) + c.c2m * x_hat_b * n2;
}

double RawSocialDelay(const OnRampConfig& config, double x_hat_b) {
  const CostCoefficients& c = config.costs();
  const double n0 = config.flows().n0();
  const double n2 = config.flows().n2();
  const double steadfast = RawSteadfastDelay(config, x_hat_b);
  const double lane2 = (c.c2t + c.c2m * n2) * x_hat_b + c.c2t * n2;
  return (1.0 - x_hat_b) * steadfast +
         x_hat_b * RawBypassDelay(config, x_hat_b) + n0 * steadfast +
         n2 * lane2;
}

double BisectSelfishIndifference(const OnRampConfig& config, double lower,
                                 double upper, double tol) {
  auto gap = [&](double x) {
    return RawSteadfastDelay(config, x) - RawBypassDelay(config, x);
  };
  double g_lo = gap(lower);
  const double g_hi = gap(upper);
  if (g_lo == 0.0) return lower;
  if (g_hi == 0.0) return upper;
  if (std::signbit(g_lo) == std::signbit(g_hi)) {
    throw Error(ErrorKind::kDegenerateConfig,
                "selfish delay gap does not change sign on the bracket");
  }
  while (upper - lower > tol) {
    const double mid = 0.5 * (lower + upper);
    const double g_mid = gap(mid);
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lower = mid;
      g_lo = g_mid;
    } else {
      upper = mid;
    }
  }
  return 0.5 * (lower + upper);
}

double GridScanSocialMinimizer(const OnRampConfig& config, double lower,
                               double upper, double step) {
  const auto n =
      static_cast<std::size_t>(std::floor((upper - lower) / step + 1e-9));
  double best_x = lower;
  double best_j = RawSocialDelay(config, lower);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = lower + static_cast<double>(i) * step;
    const double j = RawSocialDelay(config, x);
    if (j < best_j) {
      best_j = j;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace onramp::oracles

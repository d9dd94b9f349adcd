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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace onramp {
namespace {

// Absolute slack on complementarity products, covering rounding in the
// delay evaluations.
constexpr double kProductRoundoff = 1e-12;

void RequireFeasible(const FlowDistribution& flow, double alpha) {
  const auto violations = ValidateFlowDistribution(flow, alpha, 1e-9);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "infeasible flow distribution: " << violations.front().constraint
        << " (residual " << violations.front().residual << ")";
    throw Error(ErrorKind::kDomain, msg.str());
  }
}

struct Gaps {
  double selfish = 0.0;     // steadfast delay - bypass delay
  double altruistic = 0.0;  // perceived steadfast - perceived bypass
};

Gaps ComputeGaps(const OnRampConfig& config, const DerivedCoefficients& derived,
                 double x_hat_b, double beta, double e) {
  const DelayProfile delays = Delays(derived, x_hat_b);
  const AltruisticCostPair perceived =
      AltruisticCosts(config, derived, x_hat_b, beta, e);
  return {delays.j1s - delays.j1b,
          perceived.steadfast_cost - perceived.bypass_cost};
}

// Grid 0, h, 2h, ... with `upper` appended when it is not already on it.
std::vector<double> AxisGrid(double upper, double h) {
  std::vector<double> values;
  if (upper <= 0.0) {
    values.push_back(0.0);
    return values;
  }
  const auto n = static_cast<std::size_t>(std::floor(upper / h + 1e-9));
  values.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    values.push_back(std::min(upper, static_cast<double>(i) * h));
  }
  if (upper - values.back() > 1e-12) values.push_back(upper);
  return values;
}

}  // namespace

const char* EquilibriumCaseLabel(EquilibriumCase c) {
  switch (c) {
    case EquilibriumCase::kBaseline: return "baseline";
    case EquilibriumCase::kSelfishIndifferent: return "case_b";
    case EquilibriumCase::kAltruistsSaturated: return "case_c";
    case EquilibriumCase::kAltruistsIndifferent: return "case_d";
  }
  return "unknown";
}

double EquilibriumBypassFlow(const AnalysisSummary& summary, double alpha,
                             double beta_e) {
  if (beta_e == 0.0 || alpha <= summary.phi) return summary.phi;
  return std::min(alpha,
                  AltruisticIntersection(summary.phi, summary.delta, beta_e));
}

EquilibriumResult SolveEquilibrium(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   const AnalysisSummary& summary,
                                   double alpha, double beta, double e) {
  if (!summary.in_meaningful_set()) {
    throw Error(ErrorKind::kNotInMeaningfulSet,
                "equilibrium solver requires a configuration in the "
                "meaningful set: " + summary.membership.reason);
  }
  PopulationParams{alpha, beta}.Validate();
  if (!(e > 0.0) || !std::isfinite(e)) {
    std::ostringstream msg;
    msg << "error factor must be finite and > 0, got " << e;
    throw Error(ErrorKind::kDomain, msg.str());
  }

  const double beta_e = beta * e;
  const double phi = summary.phi;
  EquilibriumResult r;
  FlowDistribution& f = r.flow;

  if (alpha == 0.0 || beta_e == 0.0 || alpha <= phi) {
    // Bypass total stays at phi. Altruists fill the bypass option first;
    // with beta_e == 0 they are indifferent and this is the beta -> 0+ limit.
    r.case_label = (alpha == 0.0 || beta_e == 0.0)
                       ? EquilibriumCase::kBaseline
                       : EquilibriumCase::kSelfishIndifferent;
    r.x_hat_b = phi;
    f.x_b_altruistic = std::min(alpha, phi);
    f.x_s_altruistic = alpha - f.x_b_altruistic;
    f.x_b_selfish = phi - f.x_b_altruistic;
    f.x_s_selfish = (1.0 - alpha) - f.x_b_selfish;
  } else {
    const double intersection =
        AltruisticIntersection(phi, summary.delta, beta_e);
    if (alpha < intersection) {
      r.case_label = EquilibriumCase::kAltruistsSaturated;
      r.x_hat_b = alpha;
    } else {
      r.case_label = EquilibriumCase::kAltruistsIndifferent;
      r.x_hat_b = intersection;
    }
    f.x_b_selfish = 0.0;
    f.x_s_selfish = 1.0 - alpha;
    f.x_b_altruistic = r.x_hat_b;
    f.x_s_altruistic = alpha - r.x_hat_b;
  }

  r.delays = Delays(derived, r.x_hat_b);
  r.social_delay = SocialDelay(config, derived, r.x_hat_b);
  return r;
}

double WardropReport::MaxProduct() const {
  return *std::max_element(products.begin(), products.end());
}

WardropReport VerifyWardrop(const OnRampConfig& config,
                            const DerivedCoefficients& derived,
                            const FlowDistribution& flow, double beta,
                            double e, double tol) {
  const Gaps g = ComputeGaps(config, derived, flow.x_hat_b(), beta, e);
  WardropReport report;
  report.products = {flow.x_s_selfish * g.selfish,
                     flow.x_b_selfish * -g.selfish,
                     flow.x_s_altruistic * g.altruistic,
                     flow.x_b_altruistic * -g.altruistic};
  report.tolerance = tol;
  report.pass = report.MaxProduct() <= tol;
  return report;
}

std::vector<BruteForceCandidate> BruteForceEquilibrium(
    const OnRampConfig& config, const DerivedCoefficients& derived,
    double alpha, double beta, double e, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.1)) {
    throw Error(ErrorKind::kDomain, "grid step must lie in (0, 0.1]");
  }
  PopulationParams{alpha, beta}.Validate();

  // The selfish gap moves at rate k_s + k_b per unit of bypass flow; the
  // perceived gap at (1 + beta*e) times that.
  const double selfish_slope = derived.k_s + derived.k_b;
  const double altruistic_slope = (1.0 + beta * e) * selfish_slope;
  const double selfish_tol = selfish_slope * grid_step;
  const double altruistic_tol = altruistic_slope * grid_step;

  const std::vector<double> selfish_axis = AxisGrid(1.0 - alpha, grid_step);
  const std::vector<double> altruistic_axis = AxisGrid(alpha, grid_step);

  std::vector<BruteForceCandidate> accepted;
  for (double xb : selfish_axis) {
    for (double xtb : altruistic_axis) {
      FlowDistribution f;
      f.x_b_selfish = xb;
      f.x_s_selfish = std::max(0.0, (1.0 - alpha) - xb);
      f.x_b_altruistic = xtb;
      f.x_s_altruistic = std::max(0.0, alpha - xtb);
      const WardropReport report = VerifyWardrop(
          config, derived, f, beta, e, std::numeric_limits<double>::infinity());
      const std::array<double, 4> limits = {
          f.x_s_selfish * selfish_tol, f.x_b_selfish * selfish_tol,
          f.x_s_altruistic * altruistic_tol, f.x_b_altruistic * altruistic_tol};
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        ok = report.products[i] <= limits[i] + kProductRoundoff;
      }
      if (ok) accepted.push_back({f, f.x_hat_b(), report});
    }
  }
  return accepted;
}

DynamicsTrace BestResponseDynamics(const OnRampConfig& config,
                                   const DerivedCoefficients& derived,
                                   double alpha, double beta, double e,
                                   const FlowDistribution& initial,
                                   const DynamicsOptions& options) {
  if (!(options.step_size > 0.0 && options.step_size <= 1.0)) {
    throw Error(ErrorKind::kDomain, "step size must lie in (0, 1]");
  }
  if (!(options.tol > 0.0)) {
    throw Error(ErrorKind::kDomain, "dynamics tolerance must be positive");
  }
  PopulationParams{alpha, beta}.Validate();
  RequireFeasible(initial, alpha);
  const std::size_t stride = std::max<std::size_t>(1, options.record_stride);

  DynamicsTrace trace;
  FlowDistribution f = initial;
  for (std::size_t it = 0;; ++it) {
    const double x_hat_b = std::clamp(f.x_hat_b(), 0.0, 1.0);
    const Gaps g = ComputeGaps(config, derived, x_hat_b, beta, e);
    // Mass sitting on the costlier option, per class.
    const double selfish_worse = g.selfish > 0.0 ? f.x_s_selfish : f.x_b_selfish;
    const double altruistic_worse =
        g.altruistic > 0.0 ? f.x_s_altruistic : f.x_b_altruistic;
    const double weighted_gap =
        std::max(selfish_worse * std::abs(g.selfish),
                 altruistic_worse * std::abs(g.altruistic));

    const bool done = weighted_gap <= options.tol;
    if (done || it >= options.max_iters || it % stride == 0) {
      trace.steps.push_back({it, f, weighted_gap});
    }
    if (done) {
      trace.converged = true;
      break;
    }
    if (it >= options.max_iters) break;

    const double selfish_move =
        std::min(1.0, options.step_size * std::abs(g.selfish)) * selfish_worse;
    const double altruistic_move =
        std::min(1.0, options.step_size * std::abs(g.altruistic)) *
        altruistic_worse;
    if (g.selfish > 0.0) {
      f.x_s_selfish -= selfish_move;
      f.x_b_selfish += selfish_move;
    } else {
      f.x_b_selfish -= selfish_move;
      f.x_s_selfish += selfish_move;
    }
    if (g.altruistic > 0.0) {
      f.x_s_altruistic -= altruistic_move;
      f.x_b_altruistic += altruistic_move;
    } else {
      f.x_b_altruistic -= altruistic_move;
      f.x_s_altruistic += altruistic_move;
    }
  }
  return trace;
}

}  // namespace onramp

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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "onramp/analysis.h"
#include "onramp/config_io.h"
#include "onramp/equilibrium.h"
#include "onramp/model.h"
#include "onramp/oracles.h"
#include "onramp/robustness.h"
#include "onramp/sweeps.h"

namespace onramp::cli {
namespace {

struct Model {
  OnRampConfig config;
  DerivedCoefficients derived;
  AnalysisSummary summary;
};

Model LoadModel(const std::string& path) {
  OnRampConfig config = LoadConfigFile(path);
  const DerivedCoefficients derived = DeriveCoefficients(config);
  return {config, derived, Analyze(config, derived)};
}

void Put(std::ostream& o, const std::string& key, double value) {
  o << key << ": " << FormatNumber(value) << '\n';
}

void Put(std::ostream& o, const std::string& key, const std::string& value) {
  o << key << ": " << value << '\n';
}

void PutDerived(std::ostream& o, const DerivedCoefficients& d) {
  Put(o, "k_s", d.k_s);
  Put(o, "b_s", d.b_s);
  Put(o, "k_b", d.k_b);
  Put(o, "b_b", d.b_b);
  Put(o, "k2", d.k2);
}

void PutSummary(std::ostream& o, const AnalysisSummary& s) {
  Put(o, "phi", s.phi);
  Put(o, "delta", s.delta);
  if (s.pi) {
    Put(o, "pi", *s.pi);
  } else {
    Put(o, "pi", std::string("undefined"));
  }
  Put(o, "j_opt", s.j_opt);
  Put(o, "j_soc_at_phi", s.j_soc_at_phi);
  Put(o, "membership", std::string(s.in_meaningful_set() ? "in_G" : "not_in_G"));
  if (!s.in_meaningful_set()) Put(o, "reason", s.membership.reason);
}

void PutWorstPoints(std::ostream& o, const std::vector<WorstCasePoint>& pts) {
  for (const WorstCasePoint& p : pts) {
    o << "worst_case_point: e=" << FormatNumber(p.e)
      << " alpha=" << FormatNumber(p.alpha)
      << " x_hat_b=" << FormatNumber(p.x_hat_b)
      << " j_soc=" << FormatNumber(p.social_delay) << '\n';
  }
}

// Returns false (after printing diagnostics) when the model is outside the
// meaningful set.
bool RequireMeaningful(const Model& m, std::ostream& err) {
  if (m.summary.in_meaningful_set()) return true;
  err << "configuration is outside the meaningful set ("
      << m.summary.membership.reason << ")\n";
  PutSummary(err, m.summary);
  return false;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotInMeaningfulSet:
    case ErrorKind::kDegenerateConfig:
      return kExitNotInMeaningfulSet;
    default:
      return kExitInputError;
  }
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw Error(ErrorKind::kDomain, "cannot open output file " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<VerifyCheck> RunVerification(const Model& m, double alpha,
                                         double beta, double e,
                                         const ErrorInterval& interval,
                                         double grid_step) {
  std::vector<VerifyCheck> checks;
  std::ostringstream detail;

  const double phi_bisect = oracles::BisectSelfishIndifference(m.config);
  const double phi_gap = std::abs(phi_bisect - m.summary.phi);
  detail << "formula=" << FormatNumber(m.summary.phi)
         << " bisection=" << FormatNumber(phi_bisect);
  checks.push_back({"phi_bisection", phi_gap <= 1e-6, detail.str()});

  const double coarse =
      oracles::GridScanSocialMinimizer(m.config, -1.0, 2.0, 1e-5);
  const double fine = oracles::GridScanSocialMinimizer(m.config, coarse - 1e-5,
                                                       coarse + 1e-5, 1e-8);
  detail.str("");
  detail << "formula=" << FormatNumber(m.summary.delta)
         << " grid_scan=" << FormatNumber(fine);
  checks.push_back(
      {"delta_grid_scan", std::abs(fine - m.summary.delta) <= 1e-6, detail.str()});

  const EquilibriumResult eq =
      SolveEquilibrium(m.config, m.derived, m.summary, alpha, beta, e);
  const WardropReport wardrop =
      VerifyWardrop(m.config, m.derived, eq.flow, beta, e, 1e-9);
  detail.str("");
  detail << "max_product=" << FormatNumber(wardrop.MaxProduct());
  checks.push_back({"wardrop_residuals", wardrop.pass, detail.str()});

  const auto candidates =
      BruteForceEquilibrium(m.config, m.derived, alpha, beta, e, grid_step);
  double nearest = std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    nearest = std::min(nearest, std::abs(c.x_hat_b - eq.x_hat_b));
    lo = std::min(lo, c.x_hat_b);
    hi = std::max(hi, c.x_hat_b);
  }
  detail.str("");
  detail << "closed_form=" << FormatNumber(eq.x_hat_b)
         << " candidates=" << candidates.size() << " range=["
         << FormatNumber(lo) << ", " << FormatNumber(hi) << "]";
  const bool covered = !candidates.empty() && nearest <= grid_step + 1e-12 &&
                       lo >= eq.x_hat_b - 2.0 * grid_step &&
                       hi <= eq.x_hat_b + 2.0 * grid_step;
  checks.push_back({"brute_force_equilibrium", covered, detail.str()});

  DynamicsOptions dyn;
  dyn.step_size = std::min(
      1.0, 1.0 / ((1.0 + beta * e) * (m.derived.k_s + m.derived.k_b)));
  dyn.max_iters = 1000000;
  dyn.tol = 1e-12;
  dyn.record_stride = 1000000;
  FlowDistribution start;
  start.x_s_selfish = 1.0 - alpha;
  start.x_s_altruistic = alpha;
  const DynamicsTrace trace =
      BestResponseDynamics(m.config, m.derived, alpha, beta, e, start, dyn);
  const double dyn_x = trace.Final().flow.x_hat_b();
  detail.str("");
  detail << "converged=" << (trace.converged ? "yes" : "no")
         << " iterations=" << trace.Final().iteration
         << " x_hat_b=" << FormatNumber(dyn_x);
  checks.push_back({"best_response_dynamics",
                    trace.converged && std::abs(dyn_x - eq.x_hat_b) <= 1e-4,
                    detail.str()});

  const RobustnessSummary robust =
      OptimalAltruismLevel(m.config, m.derived, m.summary, interval);
  const double inner_step = 1e-2;
  const GridBetaResult grid = GridOptimalBeta(m.config, m.derived, m.summary,
                                              interval, 1e-3, inner_step);
  const double slack = GridSlack(m.derived, m.summary,
                                 2.0 / interval.lower(), inner_step);
  detail.str("");
  detail << "analytic=" << FormatNumber(robust.beta_star)
         << " grid=" << FormatNumber(grid.beta)
         << " poa_analytic=" << FormatNumber(robust.poa)
         << " poa_grid=" << FormatNumber(grid.poa);
  checks.push_back(
      {"optimal_beta_grid", robust.poa <= grid.poa + slack, detail.str()});
  return checks;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Altruistic lane choice at a highway on-ramp"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON on-ramp configuration")
        ->required();
    sub->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structural quantities");
  add_common(analyze);

  double alpha = 0.0;
  double beta = 1.0;
  double error = 1.0;
  CLI::App* equilibrium =
      app.add_subcommand("equilibrium", "mixed choice equilibrium");
  add_common(equilibrium);
  equilibrium->add_option("--alpha", alpha, "altruistic ratio")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  equilibrium->add_option("--beta", beta, "altruism level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  equilibrium->add_option("--error", error, "multiplicative error factor")
      ->check(CLI::PositiveNumber);

  std::vector<double> beta_list = {0.2, 0.5, 1.0};
  double step = 0.01;
  CLI::App* sweep_alpha =
      app.add_subcommand("sweep-alpha", "social delay versus altruistic ratio");
  add_common(sweep_alpha);
  sweep_alpha->add_option("--beta", beta_list, "altruism levels")
      ->check(CLI::NonNegativeNumber);
  sweep_alpha->add_option("--step", step, "alpha step in (0, 0.1]")
      ->check(CLI::Range(1e-9, 0.1));

  std::vector<double> alpha_list = {0.63, 0.8};
  double beta_e_max = 4.0;
  CLI::App* sweep_beta_e = app.add_subcommand(
      "sweep-beta-e", "social delay versus effective altruism level");
  add_common(sweep_beta_e);
  sweep_beta_e->add_option("--alpha", alpha_list, "altruistic ratios")
      ->check(CLI::Range(0.0, 1.0));
  sweep_beta_e->add_option("--beta-e-max", beta_e_max, "largest beta*e")
      ->check(CLI::NonNegativeNumber);
  sweep_beta_e->add_option("--step", step, "beta*e step")
      ->check(CLI::PositiveNumber);

  double e_lower = 0.5;
  double e_upper = 2.0;
  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--e-lower", e_lower, "lower error bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--e-upper", e_upper, "upper error bound")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* poa = app.add_subcommand("poa", "price of anarchy");
  add_common(poa);
  poa->add_option("--beta", beta, "altruism level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_interval(poa);

  bool verify_flag = false;
  double beta_step = 1e-3;
  double inner_step = 1e-2;
  CLI::App* optimal_beta =
      app.add_subcommand("optimal-beta", "worst-case optimal altruism level");
  add_common(optimal_beta);
  add_interval(optimal_beta);
  optimal_beta->add_flag("--verify", verify_flag, "compare with a grid search");
  optimal_beta->add_option("--beta-step", beta_step, "grid spacing in beta")
      ->check(CLI::PositiveNumber);
  optimal_beta->add_option("--inner-step", inner_step,
                           "grid spacing in e and alpha")
      ->check(CLI::PositiveNumber);

  double grid_step = 1e-3;
  CLI::App* verify = app.add_subcommand("verify", "run all oracle cross-checks");
  add_common(verify);
  double verify_alpha = 0.8;
  verify->add_option("--alpha", verify_alpha, "altruistic ratio")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--beta", beta, "altruism level")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--error", error, "error factor")
      ->check(CLI::PositiveNumber);
  verify->add_option("--step", grid_step, "brute-force grid step in (0, 0.1]")
      ->check(CLI::Range(1e-6, 0.1));
  add_interval(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (e_lower > e_upper) {
      throw Error(ErrorKind::kInvalidInterval,
                  "--e-lower must not exceed --e-upper");
    }
    Model model = LoadModel(config_path);
    Output sink(out_path, out);
    std::ostream& o = sink.stream();

    if (analyze->parsed()) {
      PutDerived(o, model.derived);
      PutSummary(o, model.summary);
      return model.summary.in_meaningful_set() ? kExitOk
                                               : kExitNotInMeaningfulSet;
    }
    if (!RequireMeaningful(model, err)) return kExitNotInMeaningfulSet;

    if (equilibrium->parsed()) {
      const EquilibriumResult r = SolveEquilibrium(
          model.config, model.derived, model.summary, alpha, beta, error);
      const WardropReport w =
          VerifyWardrop(model.config, model.derived, r.flow, beta, error, 1e-9);
      Put(o, "x_s_selfish", r.flow.x_s_selfish);
      Put(o, "x_b_selfish", r.flow.x_b_selfish);
      Put(o, "x_s_altruistic", r.flow.x_s_altruistic);
      Put(o, "x_b_altruistic", r.flow.x_b_altruistic);
      Put(o, "x_hat_b", r.x_hat_b);
      Put(o, "case", std::string(EquilibriumCaseLabel(r.case_label)));
      Put(o, "j1s", r.delays.j1s);
      Put(o, "j1b", r.delays.j1b);
      Put(o, "j0", r.delays.j0);
      Put(o, "j2", r.delays.j2);
      Put(o, "social_delay", r.social_delay);
      Put(o, "j_opt", model.summary.j_opt);
      for (std::size_t i = 0; i < w.products.size(); ++i) {
        Put(o, "wardrop_residual_" + std::to_string(i), w.products[i]);
      }
      Put(o, "wardrop", std::string(w.pass ? "pass" : "fail"));
      return kExitOk;
    }
    if (sweep_alpha->parsed()) {
      WriteSweepCsv(SweepAlpha(model.config, model.derived, model.summary,
                               beta_list, step),
                    o);
      return kExitOk;
    }
    if (sweep_beta_e->parsed()) {
      WriteSweepCsv(SweepBetaE(model.config, model.derived, model.summary,
                               alpha_list, beta_e_max, step),
                    o);
      return kExitOk;
    }

    const ErrorInterval interval = ErrorInterval::Create(e_lower, e_upper);
    if (poa->parsed()) {
      const WorstCase worst = WorstCaseSocialDelay(
          model.config, model.derived, model.summary, beta, interval);
      Put(o, "beta", beta);
      Put(o, "e_lower", interval.lower());
      Put(o, "e_upper", interval.upper());
      Put(o, "poa", PriceOfAnarchy(model.config, model.derived, model.summary,
                                   beta, interval));
      Put(o, "worst_case_social_delay", worst.social_delay);
      Put(o, "j_opt", model.summary.j_opt);
      PutWorstPoints(o, worst.points);
      return kExitOk;
    }
    if (optimal_beta->parsed()) {
      const RobustnessSummary r = OptimalAltruismLevel(
          model.config, model.derived, model.summary, interval);
      Put(o, "class",
          std::string(ConfigClassName(Classify(model.summary, interval).config_class)));
      Put(o, "beta_star", r.beta_star);
      Put(o, "branch", std::string(BetaStarBranchName(r.branch)));
      Put(o, "poa", r.poa);
      if (r.transition_beta_at_full_ratio) {
        Put(o, "transition_beta_at_alpha1", *r.transition_beta_at_full_ratio);
      }
      PutWorstPoints(o, r.worst_case_points);
      if (verify_flag) {
        const GridBetaResult g =
            GridOptimalBeta(model.config, model.derived, model.summary,
                            interval, beta_step, inner_step);
        Put(o, "grid_beta", g.beta);
        Put(o, "grid_poa", g.poa);
        Put(o, "beta_gap", std::abs(g.beta - r.beta_star));
        Put(o, "poa_gap", r.poa - g.poa);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto checks =
          RunVerification(model, verify_alpha, beta, error, interval, grid_step);
      bool all = true;
      for (const VerifyCheck& c : checks) {
        o << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail
          << '\n';
        all = all && c.pass;
      }
      return all ? kExitOk : kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
  return kExitInputError;
}

}  // namespace onramp::cli

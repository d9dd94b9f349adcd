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

#ifndef ONRAMP_SWEEPS_H_
#define ONRAMP_SWEEPS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "onramp/analysis.h"
#include "onramp/equilibrium.h"
#include "onramp/model.h"

namespace onramp {

enum class SweepKind {
  kAlpha,  // fixed beta (e = 1), swept altruistic ratio
  kBetaE,  // fixed altruistic ratio, swept effective level beta*e
};

struct SweepRow {
  double fixed = 0.0;
  double swept = 0.0;
  double x_hat_b = 0.0;
  EquilibriumCase case_label = EquilibriumCase::kBaseline;
  double social_delay = 0.0;
  DelayProfile delays;
};

struct Sweep {
  SweepKind kind = SweepKind::kAlpha;
  std::vector<SweepRow> rows;
};

// 0, step, 2 step, ... up to `upper`, with `upper` itself appended when the
// step does not land on it. Values are computed as k * step.
std::vector<double> SweepGrid(double upper, double step);

// One row per (beta, alpha), betas in the given order, alpha on [0, 1].
Sweep SweepAlpha(const OnRampConfig& config, const DerivedCoefficients& derived,
                 const AnalysisSummary& summary,
                 const std::vector<double>& betas, double alpha_step);

// One row per (alpha, beta*e), alphas in the given order, beta*e on
// [0, beta_e_max].
Sweep SweepBetaE(const OnRampConfig& config, const DerivedCoefficients& derived,
                 const AnalysisSummary& summary,
                 const std::vector<double>& alphas, double beta_e_max,
                 double step);

// 12 significant digits, shortest form.
std::string FormatNumber(double value);

// Header plus one LF-terminated line per row:
//   alpha sweep:  beta,alpha,x_hat_b,case,j_soc
//   beta-e sweep: alpha,beta_e,x_hat_b,case,j_soc
void WriteSweepCsv(const Sweep& sweep, std::ostream& out);

// Inverse of WriteSweepCsv; delays are left zero. Throws kDomain on a
// malformed document.
Sweep ReadSweepCsv(std::istream& in);

}  // namespace onramp

#endif  // ONRAMP_SWEEPS_H_

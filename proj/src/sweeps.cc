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

#include "onramp/sweeps.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace onramp {
namespace {

constexpr const char* kAlphaHeader = "beta,alpha,x_hat_b,case,j_soc";
constexpr const char* kBetaEHeader = "alpha,beta_e,x_hat_b,case,j_soc";

EquilibriumCase ParseCaseLabel(const std::string& label) {
  for (EquilibriumCase c :
       {EquilibriumCase::kBaseline, EquilibriumCase::kSelfishIndifferent,
        EquilibriumCase::kAltruistsSaturated,
        EquilibriumCase::kAltruistsIndifferent}) {
    if (label == EquilibriumCaseLabel(c)) return c;
  }
  throw Error(ErrorKind::kDomain, "unknown case label '" + label + "'");
}

double ParseDouble(const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    throw Error(ErrorKind::kDomain, "malformed number '" + field + "' in CSV");
  }
  return v;
}

SweepRow MakeRow(const OnRampConfig& config, const DerivedCoefficients& derived,
                 const AnalysisSummary& summary, double fixed, double swept,
                 double alpha, double beta) {
  const EquilibriumResult eq =
      SolveEquilibrium(config, derived, summary, alpha, beta, 1.0);
  return {fixed, swept, eq.x_hat_b, eq.case_label, eq.social_delay, eq.delays};
}

}  // namespace

std::vector<double> SweepGrid(double upper, double step) {
  if (!(step > 0.0) || !(upper >= 0.0) || !std::isfinite(upper)) {
    throw Error(ErrorKind::kDomain, "sweep grid needs step > 0 and upper >= 0");
  }
  const auto n = static_cast<std::size_t>(std::floor(upper / step + 1e-9));
  std::vector<double> values;
  values.reserve(n + 2);
  for (std::size_t k = 0; k <= n; ++k) {
    values.push_back(std::min(upper, static_cast<double>(k) * step));
  }
  if (upper - values.back() > 1e-12) values.push_back(upper);
  return values;
}

Sweep SweepAlpha(const OnRampConfig& config, const DerivedCoefficients& derived,
                 const AnalysisSummary& summary,
                 const std::vector<double>& betas, double alpha_step) {
  if (!(alpha_step > 0.0 && alpha_step <= 0.1)) {
    throw Error(ErrorKind::kDomain, "alpha step must lie in (0, 0.1]");
  }
  const std::vector<double> alphas = SweepGrid(1.0, alpha_step);
  Sweep sweep{SweepKind::kAlpha, {}};
  sweep.rows.reserve(betas.size() * alphas.size());
  for (double beta : betas) {
    for (double alpha : alphas) {
      sweep.rows.push_back(
          MakeRow(config, derived, summary, beta, alpha, alpha, beta));
    }
  }
  return sweep;
}

Sweep SweepBetaE(const OnRampConfig& config, const DerivedCoefficients& derived,
                 const AnalysisSummary& summary,
                 const std::vector<double>& alphas, double beta_e_max,
                 double step) {
  const std::vector<double> levels = SweepGrid(beta_e_max, step);
  Sweep sweep{SweepKind::kBetaE, {}};
  sweep.rows.reserve(alphas.size() * levels.size());
  for (double alpha : alphas) {
    for (double beta_e : levels) {
      sweep.rows.push_back(
          MakeRow(config, derived, summary, alpha, beta_e, alpha, beta_e));
    }
  }
  return sweep;
}

std::string FormatNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void WriteSweepCsv(const Sweep& sweep, std::ostream& out) {
  out << (sweep.kind == SweepKind::kAlpha ? kAlphaHeader : kBetaEHeader)
      << '\n';
  for (const SweepRow& row : sweep.rows) {
    out << FormatNumber(row.fixed) << ',' << FormatNumber(row.swept) << ','
        << FormatNumber(row.x_hat_b) << ','
        << EquilibriumCaseLabel(row.case_label) << ','
        << FormatNumber(row.social_delay) << '\n';
  }
}

Sweep ReadSweepCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kDomain, "empty sweep CSV");
  }
  Sweep sweep;
  if (line == kAlphaHeader) {
    sweep.kind = SweepKind::kAlpha;
  } else if (line == kBetaEHeader) {
    sweep.kind = SweepKind::kBetaE;
  } else {
    throw Error(ErrorKind::kDomain, "unrecognized sweep CSV header '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) {
      throw Error(ErrorKind::kDomain, "sweep CSV row needs 5 fields: " + line);
    }
    SweepRow row;
    row.fixed = ParseDouble(fields[0]);
    row.swept = ParseDouble(fields[1]);
    row.x_hat_b = ParseDouble(fields[2]);
    row.case_label = ParseCaseLabel(fields[3]);
    row.social_delay = ParseDouble(fields[4]);
    sweep.rows.push_back(row);
  }
  return sweep;
}

}  // namespace onramp

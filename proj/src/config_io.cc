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

#include "onramp/config_io.h"

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace onramp {
namespace {

constexpr std::array<const char*, 7> kConfigKeys = {"n0",  "c1t", "c1m",  "c2t",
                                                    "c2m", "mu",  "gamma"};

double RequireNumber(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string("config is missing required key '") + key + "'");
  }
  if (!it->is_number()) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string("config key '") + key + "' must be a number");
  }
  return it->get<double>();
}

}  // namespace

OnRampConfig ParseConfigJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kInvalidConfig, "config must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : kConfigKeys) known = known || item.key() == key;
    if (!known) {
      throw Error(ErrorKind::kInvalidConfig,
                  "config has unknown key '" + item.key() + "'");
    }
  }
  CostCoefficients costs;
  const double n0 = RequireNumber(doc, "n0");
  costs.c1t = RequireNumber(doc, "c1t");
  costs.c1m = RequireNumber(doc, "c1m");
  costs.c2t = RequireNumber(doc, "c2t");
  costs.c2m = RequireNumber(doc, "c2m");
  costs.mu = RequireNumber(doc, "mu");
  costs.gamma = RequireNumber(doc, "gamma");
  return OnRampConfig::Create(n0, costs);
}

OnRampConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInvalidConfig, "cannot read config file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigJson(buffer.str());
}

std::string ConfigToJson(const OnRampConfig& config) {
  const CostCoefficients& c = config.costs();
  nlohmann::ordered_json doc;
  doc["n0"] = config.flows().n0();
  doc["c1t"] = c.c1t;
  doc["c1m"] = c.c1m;
  doc["c2t"] = c.c2t;
  doc["c2m"] = c.c2m;
  doc["mu"] = c.mu;
  doc["gamma"] = c.gamma;
  return doc.dump(2);
}

}  // namespace onramp

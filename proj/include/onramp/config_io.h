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

#ifndef ONRAMP_CONFIG_IO_H_
#define ONRAMP_CONFIG_IO_H_

#include <string>
#include <string_view>

#include "onramp/model.h"

namespace onramp {

// Reads a flat JSON object with exactly the numeric keys
// n0, c1t, c1m, c2t, c2m, mu, gamma. Missing, unknown or non-numeric keys
// raise kInvalidConfig naming the key.
OnRampConfig ParseConfigJson(std::string_view text);
OnRampConfig LoadConfigFile(const std::string& path);

std::string ConfigToJson(const OnRampConfig& config);

}  // namespace onramp

#endif  // ONRAMP_CONFIG_IO_H_

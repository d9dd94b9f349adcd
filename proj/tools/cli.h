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

#ifndef ONRAMP_TOOLS_CLI_H_
#define ONRAMP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace onramp::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotInMeaningfulSet = 2;
inline constexpr int kExitVerificationFailed = 3;

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace onramp::cli

#endif  // ONRAMP_TOOLS_CLI_H_

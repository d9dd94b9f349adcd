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

#ifndef ONRAMP_ERROR_H_
#define ONRAMP_ERROR_H_

#include <stdexcept>
#include <string>

namespace onramp {

enum class ErrorKind {
  kInvalidConfig,
  kDomain,
  kDegenerateConfig,
  kSingularPi,
  kNotInMeaningfulSet,
  kInvalidPopulation,
  kOutOfRegime,
  kZeroOptimum,
  kInvalidInterval,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported with this exception; `kind()` tells the
// caller which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace onramp

#endif  // ONRAMP_ERROR_H_

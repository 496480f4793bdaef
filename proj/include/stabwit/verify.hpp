// Copyright 2026 The stabwit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "stabwit/witness.hpp"

namespace stabwit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property battery for one family/size: generator stabilization, witness
// dominance over the projector witness (PSD check), the 1/sqrt(2) overlap
// bound across bipartitions, and the product-state bound for adjacent
// generator pairs.
std::vector<CheckResult> run_verification(const WitnessSpec& spec);

}  // namespace stabwit

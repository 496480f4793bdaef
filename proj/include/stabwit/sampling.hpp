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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabwit/pauli.hpp"
#include "stabwit/scheduler.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

struct ShotEstimate {
  double mean = 0.0;
  double stderr_value = 0.0;
  std::uint64_t shots_per_setting = 0;
  // One histogram per setting, keyed by the outcome bitstring (site order,
  // '0' = +1 eigenvalue). Counts in each histogram sum to the shot count.
  std::vector<std::map<std::string, std::uint64_t>> per_setting_counts;
};

// Probabilities of the 2^n outcomes of measuring the given single-qubit
// bases simultaneously: p(o) = Tr(rho Pi_o) with Pi_o the product of
// single-site eigenprojectors. Computed by rotating each site into the Z
// basis and reading the diagonal.
Eigen::VectorXd outcome_distribution(const MeasurementSetting& setting,
                                     const DensityMatrix& rho);
Eigen::VectorXd outcome_distribution(const MeasurementSetting& setting,
                                     const StateVector& psi);

// Samples shots_per_setting outcomes per setting (inverse CDF on the exact
// distribution, one deterministic generator stream per setting derived from
// the master seed) and estimates the observable. Each term's correlation is
// the empirical mean of its +/-1 site-outcome products from its assigned
// setting; terms sharing a setting share shots, so their covariance is taken
// from the joint histogram rather than assuming independence.
ShotEstimate estimate_observable(const ObservableSum& observable,
                                 const SettingPlan& plan,
                                 const DensityMatrix& rho,
                                 std::uint64_t shots_per_setting,
                                 std::uint64_t seed);

}  // namespace stabwit

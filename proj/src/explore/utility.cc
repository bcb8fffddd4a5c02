// Copyright 2026 The GUT Authors
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

#include "gut/explore/utility.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::explore {

void CombatParams::Validate() const {
  for (double v : {explorer_step_energy, explorer_comm_energy,
                   explorer_attack_energy, explorer_attacked_hp,
                   alien_attack_energy, alien_attacked_hp, alien_step_energy,
                   speed}) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kConfigError,
                  "combat parameters must be strictly positive");
    }
  }
}

void UtilityCoeffs::Validate() const {
  if (!(a > 0.0)) {
    throw Error(ErrorCode::kConfigError, "winning utility scale a must be > 0");
  }
}

double WinningUtility(double t_e, double t_a, int n, int m, double a) {
  if (!(t_a > 0.0)) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("adversary energy must be positive, got {}", t_a));
  }
  if (n <= 0 || m < 0) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("need n >= 1 and m >= 0, got n={} m={}", n, m));
  }
  if (t_e < 0.0) {
    throw Error(ErrorCode::kDomainError, "explorer energy must be >= 0");
  }
  return a * std::pow(t_e / t_a, static_cast<double>(m) / static_cast<double>(n));
}

double WinProbability(double t_e, double t_a, int n, int m, double a) {
  return std::clamp(WinningUtility(t_e, t_a, n, m, a), 0.0, 1.0);
}

double EnergyUtility(int n, int m, double d, double b0, double b1) {
  return b0 + b1 * static_cast<double>(n - m) * d;
}

double HpUtility(int k, int g, double phi_e, double phi_m,
                 const UtilityCoeffs& c) {
  const double dealt = static_cast<double>(k) * c.h_m * c.lambda_m(phi_m);
  const double taken = static_cast<double>(g) * c.h_e * c.lambda_e(phi_e);
  return c.c0 + c.c1 * (dealt - taken);
}

}  // namespace gut::explore

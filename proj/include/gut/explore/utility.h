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

#ifndef GUT_EXPLORE_UTILITY_H_
#define GUT_EXPLORE_UTILITY_H_

namespace gut::explore {

// Per-event costs, in percent of the agent's energy or HP.
struct CombatParams {
  double explorer_step_energy = 0.015;
  double explorer_comm_energy = 0.006;
  double explorer_attack_energy = 0.01;
  double explorer_attacked_hp = 0.15;
  double alien_attack_energy = 0.03;
  double alien_attacked_hp = 0.05;
  double alien_step_energy = 0.005;
  // Distance covered by one movement step, meters per tick.
  double speed = 0.05;

  void Validate() const;
};

// Poisson hit rate as an affine function of agent size.
struct HitRate {
  double intercept = 1.0;
  double slope = 1.0;
  double operator()(double size) const { return intercept + slope * size; }
};

struct UtilityCoeffs {
  double a = 0.5;
  double b0 = 0.0;
  double b1 = 1.0;
  double c0 = 0.0;
  double c1 = 1.0;
  double h_e = 0.15;  // explorer HP lost per alien hit
  double h_m = 0.05;  // alien HP lost per explorer hit
  HitRate lambda_e;
  HitRate lambda_m;

  void Validate() const;
};

// a * (t_e / t_a)^(m / n). Throws kDomainError when t_a <= 0 or n == 0.
double WinningUtility(double t_e, double t_a, int n, int m, double a);

// WinningUtility clamped to [0, 1] for use as a success probability.
double WinProbability(double t_e, double t_a, int n, int m, double a);

// b0 + b1 * integral of (n - m) x N(x; d, 1) dx, which is b0 + b1 (n - m) d.
double EnergyUtility(int n, int m, double d, double b0, double b1);

// c0 + c1 (k h_m lambda_m(phi_m) - g h_e lambda_e(phi_e)): the expected
// per-tick HP exchange with Poisson hit counts. Positive favours explorers.
double HpUtility(int k, int g, double phi_e, double phi_m,
                 const UtilityCoeffs& coeffs);

}  // namespace gut::explore

#endif  // GUT_EXPLORE_UTILITY_H_

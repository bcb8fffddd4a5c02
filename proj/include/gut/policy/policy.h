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

#ifndef GUT_POLICY_POLICY_H_
#define GUT_POLICY_POLICY_H_

#include <array>
#include <random>
#include <span>
#include <string_view>

#include "gut/explore/world.h"

namespace gut::policy {

enum class PolicyKind {
  kGutNC,
  kGreedyQmixPC,
  kGutPC,
  kGutFC,
  kRandomBaseline,
  kGreedyOneLevel,
};

std::string_view PolicyName(PolicyKind kind);
// Accepts the names produced by PolicyName. Throws kConfigError otherwise.
PolicyKind ParsePolicy(std::string_view name);

enum class InfoMode { kComplete, kIncompleteLinear, kIncompletePoly };

std::string_view InfoModeName(InfoMode mode);
InfoMode ParseInfoMode(std::string_view name);

enum class AlienMode { kRandom, kGreedy };

std::string_view AlienModeName(AlienMode mode);
AlienMode ParseAlienMode(std::string_view name);

struct RegressionCoeffs {
  std::array<double, 3> beta_uc{0.08, 0.03, 0.0001};
  std::array<double, 3> beta_asc{0.03, 0.0003, 0.00001};
  double noise = 1.0;  // standard deviation of the additive Gaussian
};

struct Prediction {
  double e_uc = 0.0;  // energy per adversary attack
  double e_el = 0.0;  // adversary energy level
};

// E_uc = HP_uc b_uc0 + eps, E_el = 100 - HP_asc b_asc0 + eps. A null rng or
// zero noise gives the noiseless values.
Prediction PredictLinear(double hp_uc, double hp_asc,
                         const RegressionCoeffs& coeffs,
                         std::mt19937_64* rng = nullptr);

// E_uc = HP_uc^2 b_uc2 + HP_uc b_uc1 + eps,
// E_el = 100 - HP_asc^2 b_asc2 - HP_asc b_asc1 + eps.
Prediction PredictPoly(double hp_uc, double hp_asc,
                       const RegressionCoeffs& coeffs,
                       std::mt19937_64* rng = nullptr);

Prediction Predict(InfoMode mode, double hp_uc, double hp_asc,
                   const RegressionCoeffs& coeffs, std::mt19937_64* rng);

struct AdversaryEstimate {
  double hp_uc = 0.0;   // mean HP damage per alien attack
  double hp_asc = 0.0;  // mean cumulative HP loss per damaged alien
};

// Estimates from events with tick > now - window. Each field falls back to
// the matching prior when the window holds no relevant events.
AdversaryEstimate ObserveAdversary(std::span<const explore::CombatEvent> log,
                                   int now, int window,
                                   const AdversaryEstimate& priors);

struct BaselineCoeffs {
  double c1 = 0.01;
  double c2 = 0.01;
  double sigma = 1.0;
};

// A candidate of the random baseline: the means of its energy-dependent
// and health-dependent reward variables.
struct BaselineStrategy {
  double energy_mean = 0.0;
  double hp_mean = 0.0;
};

struct BaselineContext {
  double distance = 0.0;  // d
  int aliens = 0;         // n_a
  double unit_hp = 0.0;   // u_hp
};

// argmax_i 100 - c1 s_i1 d - c2 s_i2 n_a u_hp with s_i1, s_i2 drawn per
// strategy; lowest index on ties. Throws kEmptyInput on no strategies.
std::size_t DecideRandom(std::span<const BaselineStrategy> strategies,
                         const BaselineContext& ctx,
                         const BaselineCoeffs& coeffs, std::mt19937_64& rng);

// argmax_i w_i hp_i, lowest index on ties. Throws kEmptyInput on no
// strategies and kLengthMismatch on unequal spans.
std::size_t DecideGreedyOneLevel(std::span<const double> win,
                                 std::span<const double> hp);

}  // namespace gut::policy

#endif  // GUT_POLICY_POLICY_H_

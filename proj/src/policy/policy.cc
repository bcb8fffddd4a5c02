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

#include "gut/policy/policy.h"

#include <map>
#include <string>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::policy {
namespace {

double Noise(const RegressionCoeffs& coeffs, std::mt19937_64* rng) {
  if (rng == nullptr || coeffs.noise == 0.0) return 0.0;
  return std::normal_distribution<double>(0.0, coeffs.noise)(*rng);
}

template <typename Enum, std::size_t N>
Enum ParseName(std::string_view name, const std::array<Enum, N>& all,
               std::string_view (*to_name)(Enum), std::string_view what) {
  for (Enum e : all) {
    if (to_name(e) == name) return e;
  }
  throw Error(ErrorCode::kConfigError,
              fmt::format("unknown {} '{}'", what, name));
}

}  // namespace

std::string_view PolicyName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kGutNC: return "gut_nc";
    case PolicyKind::kGreedyQmixPC: return "greedy_qmix_pc";
    case PolicyKind::kGutPC: return "gut_pc";
    case PolicyKind::kGutFC: return "gut_fc";
    case PolicyKind::kRandomBaseline: return "random";
    case PolicyKind::kGreedyOneLevel: return "greedy_one_level";
  }
  return "unknown";
}

PolicyKind ParsePolicy(std::string_view name) {
  constexpr std::array kAll{PolicyKind::kGutNC,          PolicyKind::kGreedyQmixPC,
                            PolicyKind::kGutPC,          PolicyKind::kGutFC,
                            PolicyKind::kRandomBaseline, PolicyKind::kGreedyOneLevel};
  return ParseName(name, kAll, &PolicyName, "policy");
}

std::string_view InfoModeName(InfoMode mode) {
  switch (mode) {
    case InfoMode::kComplete: return "complete";
    case InfoMode::kIncompleteLinear: return "linear";
    case InfoMode::kIncompletePoly: return "poly";
  }
  return "unknown";
}

InfoMode ParseInfoMode(std::string_view name) {
  constexpr std::array kAll{InfoMode::kComplete, InfoMode::kIncompleteLinear,
                            InfoMode::kIncompletePoly};
  return ParseName(name, kAll, &InfoModeName, "info mode");
}

std::string_view AlienModeName(AlienMode mode) {
  return mode == AlienMode::kRandom ? "random" : "greedy";
}

AlienMode ParseAlienMode(std::string_view name) {
  constexpr std::array kAll{AlienMode::kRandom, AlienMode::kGreedy};
  return ParseName(name, kAll, &AlienModeName, "alien mode");
}

Prediction PredictLinear(double hp_uc, double hp_asc,
                         const RegressionCoeffs& c, std::mt19937_64* rng) {
  Prediction p;
  p.e_uc = hp_uc * c.beta_uc[0] + Noise(c, rng);
  p.e_el = 100.0 - hp_asc * c.beta_asc[0] + Noise(c, rng);
  return p;
}

Prediction PredictPoly(double hp_uc, double hp_asc, const RegressionCoeffs& c,
                       std::mt19937_64* rng) {
  Prediction p;
  p.e_uc = hp_uc * hp_uc * c.beta_uc[2] + hp_uc * c.beta_uc[1] + Noise(c, rng);
  p.e_el = 100.0 - hp_asc * hp_asc * c.beta_asc[2] - hp_asc * c.beta_asc[1] +
           Noise(c, rng);
  return p;
}

Prediction Predict(InfoMode mode, double hp_uc, double hp_asc,
                   const RegressionCoeffs& coeffs, std::mt19937_64* rng) {
  switch (mode) {
    case InfoMode::kIncompleteLinear:
      return PredictLinear(hp_uc, hp_asc, coeffs, rng);
    case InfoMode::kIncompletePoly:
      return PredictPoly(hp_uc, hp_asc, coeffs, rng);
    case InfoMode::kComplete:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "complete information needs no prediction");
}

AdversaryEstimate ObserveAdversary(std::span<const explore::CombatEvent> log,
                                   int now, int window,
                                   const AdversaryEstimate& priors) {
  if (window < 1) {
    throw Error(ErrorCode::kInvalidArgument, "observation window must be >= 1");
  }
  double dealt = 0.0;
  int attacks = 0;
  std::map<int, double> losses;
  for (const explore::CombatEvent& e : log) {
    if (e.tick <= now - window || e.tick > now) continue;
    if (e.attacker_side == explore::Side::kAlien) {
      dealt += e.hp_damage;
      ++attacks;
    } else {
      losses[e.target] += e.hp_damage;
    }
  }
  AdversaryEstimate out = priors;
  if (attacks > 0) out.hp_uc = dealt / attacks;
  if (!losses.empty()) {
    double total = 0.0;
    for (const auto& [id, loss] : losses) total += loss;
    out.hp_asc = total / static_cast<double>(losses.size());
  }
  return out;
}

std::size_t DecideRandom(std::span<const BaselineStrategy> strategies,
                         const BaselineContext& ctx,
                         const BaselineCoeffs& coeffs, std::mt19937_64& rng) {
  if (strategies.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no strategies to choose from");
  }
  std::size_t best = 0;
  double best_reward = 0.0;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    double s1 = strategies[i].energy_mean;
    double s2 = strategies[i].hp_mean;
    if (coeffs.sigma > 0.0) {
      s1 = std::normal_distribution<double>(s1, coeffs.sigma)(rng);
      s2 = std::normal_distribution<double>(s2, coeffs.sigma)(rng);
    }
    const double reward = 100.0 - coeffs.c1 * s1 * ctx.distance -
                          coeffs.c2 * s2 * ctx.aliens * ctx.unit_hp;
    if (i == 0 || reward > best_reward) {
      best = i;
      best_reward = reward;
    }
  }
  return best;
}

std::size_t DecideGreedyOneLevel(std::span<const double> win,
                                 std::span<const double> hp) {
  if (win.empty()) throw Error(ErrorCode::kEmptyInput, "no strategies");
  if (win.size() != hp.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("{} win rates but {} HP metrics", win.size(),
                            hp.size()));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < win.size(); ++i) {
    if (win[i] * hp[i] > win[best] * hp[best]) best = i;
  }
  return best;
}

}  // namespace gut::policy

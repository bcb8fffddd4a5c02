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

#ifndef GUT_HARNESS_HARNESS_H_
#define GUT_HARNESS_HARNESS_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gut/explore/world.h"
#include "gut/policy/policy.h"
#include "gut/policy/team.h"

namespace gut::harness {

struct ScenarioConfig {
  std::string name = "scenario";
  int explorers = 20;
  int aliens = 30;
  explore::ArenaConfig arena;
  policy::PolicyKind policy = policy::PolicyKind::kGutFC;
  policy::AlienMode alien_mode = policy::AlienMode::kRandom;
  policy::InfoMode info = policy::InfoMode::kComplete;
  int trials = 10;
  std::uint64_t seed = 0;
  int tick_limit = 5000;

  double explorer_sense_radius = 2.0;
  double explorer_attack_radius = 0.5;
  double alien_sense_radius = 3.0;  // aliens perceive farther than explorers
  double alien_attack_radius = 0.5;
  // Starting alien HP; 100 unless a test presets it.
  double alien_initial_hp = 100.0;

  explore::CombatParams combat;
  policy::TeamParams team;

  // Throws kConfigError.
  void Validate() const;
};

// Flat `key = value` lines under [section] headers. Unknown sections or
// keys throw kConfigError.
ScenarioConfig ParseScenario(std::istream& in);
ScenarioConfig LoadScenario(const std::string& path);

struct TrialMetrics {
  bool win = false;
  bool draw = false;
  int ticks = 0;
  double mean_explorer_energy_cost = 0.0;
  double mean_explorer_hp_cost = 0.0;
  int explorers_lost = 0;
  int aliens_killed = 0;
  // Summed over all explorers.
  double system_energy_cost = 0.0;
  double system_hp_cost = 0.0;

  bool operator==(const TrialMetrics&) const = default;
};

// Deterministic in (cfg, trial). Errors carry the trial index.
TrialMetrics RunTrial(const ScenarioConfig& cfg, int trial);

// Initial world of a trial.
explore::WorldState SpawnWorld(const ScenarioConfig& cfg, int trial);

struct BatchSummary {
  std::string scenario;
  std::string policy;
  std::string info;
  int explorers = 0;
  int aliens = 0;
  int trials = 0;
  int wins = 0;
  int draws = 0;
  double win_rate = 0.0;
  std::optional<double> c_se_per_win;
  std::optional<double> c_shp_per_win;
  std::optional<double> explorers_lost_per_win;
  double explorers_lost_per_round = 0.0;
  std::optional<double> lost_per_kill;
  std::optional<double> hp_cost_per_kill;
  std::vector<TrialMetrics> records;
};

// Aggregates per-trial records in index order.
BatchSummary Summarize(const ScenarioConfig& cfg,
                       std::vector<TrialMetrics> records);

// Runs trials 0..trials-1 on `threads` workers (0 = GUT_THREADS or 1).
// Failures from any trial are collected into one kTrialFailure.
BatchSummary RunBatch(const ScenarioConfig& cfg, int threads = 0);

// GUT_THREADS when set to a positive integer, else 1.
int ThreadCountFromEnv();

enum class ReportFormat { kCsv, kTable };

// Throws kEmptyInput on an empty list.
std::string Report(std::span<const BatchSummary> summaries, ReportFormat format);

// Bundled scenario sets: "paper-table4", "paper-table5", "paper-table8".
std::vector<ScenarioConfig> Suite(std::string_view name, std::uint64_t seed);

}  // namespace gut::harness

#endif  // GUT_HARNESS_HARNESS_H_

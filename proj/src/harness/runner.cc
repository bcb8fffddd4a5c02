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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "gut/error.h"
#include "gut/harness/harness.h"

namespace gut::harness {
namespace {

using explore::AgentState;
using explore::Side;
using explore::Vec2;
using explore::WorldState;

enum Stream : std::uint64_t { kSpawnStream = 1, kExplorerStream = 2, kAlienStream = 3 };

std::mt19937_64 StreamRng(const ScenarioConfig& cfg, int trial, Stream stream) {
  const std::uint64_t base = cfg.seed ^ static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(base),
                    static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

Vec2 SpawnPoint(const explore::ArenaConfig& arena, bool left, std::mt19937_64& rng) {
  const double margin = 0.5;
  const double half = arena.width / 2.0;
  std::uniform_real_distribution<double> x(left ? margin : half + margin,
                                           left ? half - margin : arena.width - margin);
  std::uniform_real_distribution<double> y(margin, arena.height - margin);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vec2 p{x(rng), y(rng)};
    bool clear = true;
    for (const explore::Circle& c : arena.obstacles) {
      clear = clear && explore::Distance(p, c.center) >=
                           c.radius + explore::kDefaultClearance;
    }
    if (clear) return p;
  }
  throw Error(ErrorCode::kConfigError, "no free spawn point in the arena");
}

}  // namespace

WorldState SpawnWorld(const ScenarioConfig& cfg, int trial) {
  std::mt19937_64 rng = StreamRng(cfg, trial, kSpawnStream);
  WorldState world;
  world.arena = cfg.arena;
  int id = 0;
  for (int i = 0; i < cfg.explorers; ++i, ++id) {
    AgentState a{id, Side::kExplorer, SpawnPoint(cfg.arena, true, rng)};
    a.sense_radius = cfg.explorer_sense_radius;
    a.attack_radius = cfg.explorer_attack_radius;
    world.agents.push_back(a);
  }
  for (int i = 0; i < cfg.aliens; ++i, ++id) {
    AgentState a{id, Side::kAlien, SpawnPoint(cfg.arena, false, rng)};
    a.sense_radius = cfg.alien_sense_radius;
    a.attack_radius = cfg.alien_attack_radius;
    a.hp = cfg.alien_initial_hp;
    a.alive = a.hp > 0.0;
    world.agents.push_back(a);
  }
  return world;
}

TrialMetrics RunTrial(const ScenarioConfig& cfg, int trial) {
  try {
    cfg.Validate();
    std::mt19937_64 explorer_rng = StreamRng(cfg, trial, kExplorerStream);
    std::mt19937_64 alien_rng = StreamRng(cfg, trial, kAlienStream);
    WorldState world = SpawnWorld(cfg, trial);
    policy::ExplorerTeam team(cfg.policy, cfg.info, cfg.team);
    std::vector<explore::CombatEvent> history;
    const int window = cfg.team.observation_window;

    explore::Outcome outcome = explore::Evaluate(world, cfg.tick_limit);
    while (outcome == explore::Outcome::kOngoing) {
      std::vector<explore::Command> cmds = team.Act(world, history, explorer_rng);
      std::vector<explore::Command> alien = policy::AlienCommands(
          world, cfg.alien_mode, cfg.team.greedy_a, alien_rng);
      cmds.insert(cmds.end(), alien.begin(), alien.end());
      world = explore::Step(world, cmds, cfg.combat);
      history.insert(history.end(), world.log.begin(), world.log.end());
      const int oldest = world.tick - window;
      auto keep = std::find_if(history.begin(), history.end(),
                               [&](const auto& e) { return e.tick > oldest; });
      if (keep - history.begin() > 4096) history.erase(history.begin(), keep);
      outcome = explore::Evaluate(world, cfg.tick_limit);
    }

    TrialMetrics m;
    m.win = outcome == explore::Outcome::kExplorersWin;
    m.draw = outcome == explore::Outcome::kDraw;
    m.ticks = world.tick;
    for (const AgentState& a : world.agents) {
      if (a.side == Side::kExplorer) {
        m.system_energy_cost += 100.0 - a.energy;
        m.system_hp_cost += 100.0 - a.hp;
        m.explorers_lost += a.alive ? 0 : 1;
      } else {
        m.aliens_killed += a.alive ? 0 : 1;
      }
    }
    m.mean_explorer_energy_cost = m.system_energy_cost / cfg.explorers;
    m.mean_explorer_hp_cost = m.system_hp_cost / cfg.explorers;
    return m;
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("trial {}: {}", trial, e.what()));
  }
}

BatchSummary Summarize(const ScenarioConfig& cfg,
                       std::vector<TrialMetrics> records) {
  BatchSummary s;
  s.scenario = cfg.name;
  s.policy = std::string(policy::PolicyName(cfg.policy));
  s.info = std::string(policy::InfoModeName(cfg.info));
  s.explorers = cfg.explorers;
  s.aliens = cfg.aliens;
  s.trials = static_cast<int>(records.size());
  double win_energy = 0.0;
  double win_hp = 0.0;
  double win_lost = 0.0;
  double lost = 0.0;
  double kills = 0.0;
  double hp = 0.0;
  for (const TrialMetrics& m : records) {
    s.wins += m.win ? 1 : 0;
    s.draws += m.draw ? 1 : 0;
    lost += m.explorers_lost;
    kills += m.aliens_killed;
    hp += m.system_hp_cost;
    if (m.win) {
      win_energy += m.system_energy_cost;
      win_hp += m.system_hp_cost;
      win_lost += m.explorers_lost;
    }
  }
  if (s.trials > 0) {
    s.win_rate = static_cast<double>(s.wins) / s.trials;
    s.explorers_lost_per_round = lost / s.trials;
  }
  if (s.wins > 0) {
    s.c_se_per_win = win_energy / s.wins;
    s.c_shp_per_win = win_hp / s.wins;
    s.explorers_lost_per_win = win_lost / s.wins;
  }
  if (kills > 0) {
    s.lost_per_kill = lost / kills;
    s.hp_cost_per_kill = hp / kills;
  }
  s.records = std::move(records);
  return s;
}

int ThreadCountFromEnv() {
  const char* env = std::getenv("GUT_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<int>(std::min<long>(n, 256));
}

BatchSummary RunBatch(const ScenarioConfig& cfg, int threads) {
  cfg.Validate();
  if (threads <= 0) threads = ThreadCountFromEnv();
  threads = std::min(threads, cfg.trials);
  std::vector<TrialMetrics> records(static_cast<std::size_t>(cfg.trials));
  std::vector<std::string> failures(static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < cfg.trials; t = next++) {
      try {
        records[t] = RunTrial(cfg, t);
      } catch (const std::exception& e) {
        failures[t] = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  std::string report;
  for (const std::string& f : failures) {
    if (!f.empty()) report += (report.empty() ? "" : "; ") + f;
  }
  if (!report.empty()) {
    throw Error(ErrorCode::kTrialFailure,
                fmt::format("{}: {}", cfg.name, report));
  }
  return Summarize(cfg, std::move(records));
}

}  // namespace gut::harness

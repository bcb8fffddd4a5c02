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

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "gut/error.h"
#include "gut/harness/harness.h"

namespace gut::harness {
namespace {

namespace pt = boost::property_tree;

using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

template <typename T>
T Convert(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (in.fail() || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("bad value '{}' for {}", text, key));
  }
  return value;
}

std::vector<explore::Circle> ParseObstacles(const std::string& text) {
  const std::string t = boost::trim_copy(text);
  if (t == "none" || t.empty()) return {};
  if (t == "two_mountains") return explore::TwoMountains();
  std::vector<explore::Circle> out;
  std::vector<std::string> items;
  boost::split(items, t, boost::is_any_of(";"));
  for (const std::string& item : items) {
    std::vector<std::string> parts;
    boost::split(parts, item, boost::is_any_of(","));
    if (parts.size() != 3) {
      throw Error(ErrorCode::kConfigError,
                  fmt::format("obstacle '{}' is not x,y,r", item));
    }
    out.push_back({{Convert<double>("obstacle", boost::trim_copy(parts[0])),
                    Convert<double>("obstacle", boost::trim_copy(parts[1]))},
                   Convert<double>("obstacle", boost::trim_copy(parts[2]))});
  }
  return out;
}

#define GUT_DOUBLE(path) \
  [](ScenarioConfig& c, const std::string& v) { c.path = Convert<double>(#path, v); }
#define GUT_INT(path) \
  [](ScenarioConfig& c, const std::string& v) { c.path = Convert<int>(#path, v); }

const std::map<std::string, Setter>& Setters() {
  static const auto* setters = new std::map<std::string, Setter>{
      {"scenario.name", [](ScenarioConfig& c, const std::string& v) { c.name = v; }},
      {"scenario.explorers", GUT_INT(explorers)},
      {"scenario.aliens", GUT_INT(aliens)},
      {"scenario.policy",
       [](ScenarioConfig& c, const std::string& v) { c.policy = policy::ParsePolicy(v); }},
      {"scenario.alien_mode",
       [](ScenarioConfig& c, const std::string& v) {
         c.alien_mode = policy::ParseAlienMode(v);
       }},
      {"scenario.info",
       [](ScenarioConfig& c, const std::string& v) { c.info = policy::ParseInfoMode(v); }},
      {"scenario.trials", GUT_INT(trials)},
      {"scenario.seed",
       [](ScenarioConfig& c, const std::string& v) {
         c.seed = Convert<std::uint64_t>("seed", v);
       }},
      {"scenario.tick_limit", GUT_INT(tick_limit)},
      {"scenario.gut_levels", GUT_INT(team.gut_levels)},
      {"arena.width", GUT_DOUBLE(arena.width)},
      {"arena.height", GUT_DOUBLE(arena.height)},
      {"arena.treasure_x", GUT_DOUBLE(arena.treasure.x)},
      {"arena.treasure_y", GUT_DOUBLE(arena.treasure.y)},
      {"arena.treasure_radius", GUT_DOUBLE(arena.treasure_radius)},
      {"arena.engagement_range", GUT_DOUBLE(arena.engagement_range)},
      {"arena.obstacles",
       [](ScenarioConfig& c, const std::string& v) {
         c.arena.obstacles = ParseObstacles(v);
       }},
      {"agents.explorer_sense_radius", GUT_DOUBLE(explorer_sense_radius)},
      {"agents.explorer_attack_radius", GUT_DOUBLE(explorer_attack_radius)},
      {"agents.alien_sense_radius", GUT_DOUBLE(alien_sense_radius)},
      {"agents.alien_attack_radius", GUT_DOUBLE(alien_attack_radius)},
      {"agents.alien_initial_hp", GUT_DOUBLE(alien_initial_hp)},
      {"combat.explorer_step_energy", GUT_DOUBLE(combat.explorer_step_energy)},
      {"combat.explorer_comm_energy", GUT_DOUBLE(combat.explorer_comm_energy)},
      {"combat.explorer_attack_energy", GUT_DOUBLE(combat.explorer_attack_energy)},
      {"combat.explorer_attacked_hp", GUT_DOUBLE(combat.explorer_attacked_hp)},
      {"combat.alien_attack_energy", GUT_DOUBLE(combat.alien_attack_energy)},
      {"combat.alien_attacked_hp", GUT_DOUBLE(combat.alien_attacked_hp)},
      {"combat.alien_step_energy", GUT_DOUBLE(combat.alien_step_energy)},
      {"combat.speed", GUT_DOUBLE(combat.speed)},
      {"utility.a", GUT_DOUBLE(team.utility.a)},
      {"utility.b0", GUT_DOUBLE(team.utility.b0)},
      {"utility.b1", GUT_DOUBLE(team.utility.b1)},
      {"utility.c0", GUT_DOUBLE(team.utility.c0)},
      {"utility.c1", GUT_DOUBLE(team.utility.c1)},
      {"utility.h_e", GUT_DOUBLE(team.utility.h_e)},
      {"utility.h_m", GUT_DOUBLE(team.utility.h_m)},
      {"utility.lambda_e_intercept", GUT_DOUBLE(team.utility.lambda_e.intercept)},
      {"utility.lambda_e_slope", GUT_DOUBLE(team.utility.lambda_e.slope)},
      {"utility.lambda_m_intercept", GUT_DOUBLE(team.utility.lambda_m.intercept)},
      {"utility.lambda_m_slope", GUT_DOUBLE(team.utility.lambda_m.slope)},
      {"regression.beta_uc0", GUT_DOUBLE(team.regression.beta_uc[0])},
      {"regression.beta_uc1", GUT_DOUBLE(team.regression.beta_uc[1])},
      {"regression.beta_uc2", GUT_DOUBLE(team.regression.beta_uc[2])},
      {"regression.beta_asc0", GUT_DOUBLE(team.regression.beta_asc[0])},
      {"regression.beta_asc1", GUT_DOUBLE(team.regression.beta_asc[1])},
      {"regression.beta_asc2", GUT_DOUBLE(team.regression.beta_asc[2])},
      {"regression.noise", GUT_DOUBLE(team.regression.noise)},
      {"baseline.c1", GUT_DOUBLE(team.baseline.c1)},
      {"baseline.c2", GUT_DOUBLE(team.baseline.c2)},
      {"baseline.sigma", GUT_DOUBLE(team.baseline.sigma)},
      {"team.epoch_ticks", GUT_INT(team.epoch_ticks)},
      {"team.observation_window", GUT_INT(team.observation_window)},
      {"team.attack_spacing", GUT_DOUBLE(team.attack_spacing)},
      {"team.defend_spacing", GUT_DOUBLE(team.defend_spacing)},
      {"team.converge_range", GUT_DOUBLE(team.converge_range)},
      {"team.greedy_threshold", GUT_DOUBLE(team.greedy_threshold)},
      {"team.greedy_a", GUT_DOUBLE(team.greedy_a)},
  };
  return *setters;
}

#undef GUT_DOUBLE
#undef GUT_INT

}  // namespace

void ScenarioConfig::Validate() const {
  if (explorers < 1 || aliens < 1) {
    throw Error(ErrorCode::kConfigError, "both teams need at least one agent");
  }
  if (trials < 1 || tick_limit < 1) {
    throw Error(ErrorCode::kConfigError, "trials and tick_limit must be >= 1");
  }
  for (double r : {explorer_sense_radius, explorer_attack_radius,
                   alien_sense_radius, alien_attack_radius}) {
    if (!(r > 0.0)) {
      throw Error(ErrorCode::kConfigError, "agent radii must be > 0");
    }
  }
  if (alien_initial_hp < 0.0 || alien_initial_hp > 100.0) {
    throw Error(ErrorCode::kConfigError, "alien_initial_hp must be in [0, 100]");
  }
  arena.Validate();
  combat.Validate();
  team.Validate();
}

ScenarioConfig ParseScenario(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  ScenarioConfig cfg;
  const auto& setters = Setters();
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      throw Error(ErrorCode::kConfigError,
                  fmt::format("key '{}' outside a [section]", section));
    }
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      auto it = setters.find(full);
      if (it == setters.end()) {
        throw Error(ErrorCode::kConfigError, fmt::format("unknown key '{}'", full));
      }
      try {
        it->second(cfg, boost::trim_copy(value.data()));
      } catch (const Error& e) {
        throw Error(ErrorCode::kConfigError, fmt::format("{}: {}", full, e.what()));
      }
    }
  }
  cfg.Validate();
  return cfg;
}

ScenarioConfig LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kConfigError, fmt::format("cannot open '{}'", path));
  }
  return ParseScenario(in);
}

}  // namespace gut::harness

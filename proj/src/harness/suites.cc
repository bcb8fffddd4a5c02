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

#include <utility>

#include <fmt/format.h>

#include "gut/error.h"
#include "gut/harness/harness.h"

namespace gut::harness {
namespace {

using policy::AlienMode;
using policy::InfoMode;
using policy::PolicyKind;

ScenarioConfig Base(std::string prefix, int explorers, int aliens,
                    std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.name = fmt::format("{}-{}e{}a", prefix, explorers, aliens);
  cfg.explorers = explorers;
  cfg.aliens = aliens;
  cfg.seed = seed;
  cfg.trials = 10;
  return cfg;
}

std::vector<ScenarioConfig> Table4(std::uint64_t seed) {
  std::vector<ScenarioConfig> out;
  for (auto [e, a] : {std::pair{20, 30}, {25, 25}, {30, 20}}) {
    for (PolicyKind p : {PolicyKind::kGutNC, PolicyKind::kGreedyQmixPC,
                         PolicyKind::kGutPC, PolicyKind::kGutFC}) {
      ScenarioConfig cfg = Base("t4", e, a, seed);
      cfg.policy = p;
      out.push_back(cfg);
    }
  }
  return out;
}

std::vector<ScenarioConfig> Table5(std::uint64_t seed) {
  std::vector<ScenarioConfig> out;
  constexpr InfoMode kModes[] = {InfoMode::kComplete, InfoMode::kIncompleteLinear,
                                 InfoMode::kIncompletePoly};
  for (auto [e, a] : {std::pair{20, 30}, {20, 25}, {25, 25}, {25, 20}, {30, 20}}) {
    for (InfoMode info : kModes) {
      ScenarioConfig cfg = Base("t5", e, a, seed);
      cfg.policy = PolicyKind::kGutFC;
      cfg.info = info;
      out.push_back(cfg);
    }
  }
  for (InfoMode info : kModes) {
    ScenarioConfig cfg = Base("t5-obstacles", 25, 25, seed);
    cfg.policy = PolicyKind::kGutFC;
    cfg.info = info;
    cfg.alien_mode = AlienMode::kGreedy;
    cfg.arena.obstacles = explore::TwoMountains();
    out.push_back(cfg);
  }
  return out;
}

std::vector<ScenarioConfig> Table8(std::uint64_t seed) {
  std::vector<ScenarioConfig> out;
  for (auto [e, a] : {std::pair{1, 1}, {1, 2}, {4, 3}}) {
    for (PolicyKind p : {PolicyKind::kRandomBaseline, PolicyKind::kGreedyOneLevel,
                         PolicyKind::kGutPC}) {
      ScenarioConfig cfg = Base(e == 4 ? "t8-obstacles" : "t8", e, a, seed);
      cfg.policy = p;
      cfg.team.gut_levels = 2;
      if (e == 4) cfg.arena.obstacles = explore::TwoMountains();
      out.push_back(cfg);
    }
  }
  return out;
}

}  // namespace

std::vector<ScenarioConfig> Suite(std::string_view name, std::uint64_t seed) {
  if (name == "paper-table4") return Table4(seed);
  if (name == "paper-table5") return Table5(seed);
  if (name == "paper-table8") return Table8(seed);
  throw Error(ErrorCode::kConfigError, fmt::format("unknown suite '{}'", name));
}

}  // namespace gut::harness

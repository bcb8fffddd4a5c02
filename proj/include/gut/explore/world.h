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

#ifndef GUT_EXPLORE_WORLD_H_
#define GUT_EXPLORE_WORLD_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gut/explore/geometry.h"
#include "gut/explore/utility.h"

namespace gut::explore {

struct ArenaConfig {
  double width = 10.0;
  double height = 10.0;
  Vec2 treasure{8.5, 8.5};
  double treasure_radius = 0.5;
  // Aliens closer than treasure_radius + engagement_range to the treasure
  // contest it.
  double engagement_range = 1.0;
  std::vector<Circle> obstacles;

  bool InBounds(Vec2 p) const;
  Vec2 Clamp(Vec2 p) const;
  bool Blocked(Vec2 p) const;
  // Throws kConfigError on a treasure outside the arena or under an obstacle.
  void Validate() const;
};

// The two-mountain arena: circles straddling the approach to the treasure.
std::vector<Circle> TwoMountains();

enum class Side { kExplorer, kAlien };

std::string_view SideName(Side side);

struct AgentState {
  int id = 0;
  Side side = Side::kExplorer;
  Vec2 position;
  double energy = 100.0;
  double hp = 100.0;
  bool alive = true;
  double sense_radius = 2.0;
  double attack_radius = 0.5;
};

struct Command {
  int agent_id = 0;
  std::optional<Vec2> move_to;
  std::optional<int> attack_target;
  bool communicate = false;
};

struct CombatEvent {
  int tick = 0;
  int attacker = 0;
  int target = 0;
  Side attacker_side = Side::kExplorer;
  double hp_damage = 0.0;
};

struct WorldState {
  ArenaConfig arena;
  std::vector<AgentState> agents;  // ordered by id; ids are dense from 0
  int tick = 0;
  std::vector<CombatEvent> log;

  const AgentState& agent(int id) const;
  bool HasAgent(int id) const;
  int LivingCount(Side side) const;
};

// One simultaneous tick: moves, communication, then attacks resolved on the
// post-move positions against pre-attack vitals. Commands for dead agents
// and attacks on dead or out-of-range targets are ignored. Throws
// kUnknownAgent for ids not in the world.
WorldState Step(const WorldState& world, std::span<const Command> commands,
                const CombatParams& params);

enum class Outcome { kOngoing, kExplorersWin, kAliensWin, kDraw };

std::string_view OutcomeName(Outcome outcome);

// AliensWin once every explorer is dead. ExplorersWin once every alien is
// dead, or a living explorer holds the treasure circle with no living alien
// contesting it. Draw at the tick limit.
Outcome Evaluate(const WorldState& world, int tick_limit);

// One line per agent: id side x y energy hp alive.
std::string FormatSnapshot(const WorldState& world);

// Energy spent by a lone explorer walking from `from` to `to` through the
// arena's obstacles with AvoidObstacles waypoints. Throws kNoPath when it
// does not arrive within `max_ticks`.
double TravelEnergy(const ArenaConfig& arena, Vec2 from, Vec2 to,
                    const CombatParams& params, int max_ticks = 100000);

}  // namespace gut::explore

#endif  // GUT_EXPLORE_WORLD_H_

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

#include "gut/explore/world.h"

#include <algorithm>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::explore {

bool ArenaConfig::InBounds(Vec2 p) const {
  return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
}

Vec2 ArenaConfig::Clamp(Vec2 p) const {
  return {std::clamp(p.x, 0.0, width), std::clamp(p.y, 0.0, height)};
}

bool ArenaConfig::Blocked(Vec2 p) const {
  for (const Circle& c : obstacles) {
    if (c.Contains(p)) return true;
  }
  return false;
}

void ArenaConfig::Validate() const {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw Error(ErrorCode::kConfigError, "arena dimensions must be positive");
  }
  if (!InBounds(treasure)) {
    throw Error(ErrorCode::kConfigError, "treasure lies outside the arena");
  }
  if (!(treasure_radius > 0.0) || engagement_range < 0.0) {
    throw Error(ErrorCode::kConfigError, "treasure radii must be positive");
  }
  for (const Circle& c : obstacles) {
    if (!(c.radius > 0.0)) {
      throw Error(ErrorCode::kConfigError, "obstacle radius must be positive");
    }
    if (Distance(c.center, treasure) < c.radius + treasure_radius) {
      throw Error(ErrorCode::kConfigError, "obstacle covers the treasure");
    }
  }
}

std::vector<Circle> TwoMountains() {
  return {{{5.5, 8.0}, 0.9}, {{8.0, 5.5}, 0.9}};
}

std::string_view SideName(Side side) {
  return side == Side::kExplorer ? "explorer" : "alien";
}

const AgentState& WorldState::agent(int id) const {
  if (!HasAgent(id)) {
    throw Error(ErrorCode::kUnknownAgent, fmt::format("no agent {}", id));
  }
  return agents[static_cast<std::size_t>(id)];
}

bool WorldState::HasAgent(int id) const {
  return id >= 0 && static_cast<std::size_t>(id) < agents.size() &&
         agents[static_cast<std::size_t>(id)].id == id;
}

int WorldState::LivingCount(Side side) const {
  int n = 0;
  for (const AgentState& a : agents) n += (a.alive && a.side == side) ? 1 : 0;
  return n;
}

WorldState Step(const WorldState& world, std::span<const Command> commands,
                const CombatParams& params) {
  for (const Command& c : commands) {
    if (!world.HasAgent(c.agent_id)) {
      throw Error(ErrorCode::kUnknownAgent,
                  fmt::format("command for unknown agent {}", c.agent_id));
    }
    if (c.attack_target && !world.HasAgent(*c.attack_target)) {
      throw Error(ErrorCode::kUnknownAgent,
                  fmt::format("agent {} attacks unknown agent {}", c.agent_id,
                              *c.attack_target));
    }
  }

  WorldState next = world;
  next.log.clear();
  const int tick = world.tick;

  for (const Command& c : commands) {
    const AgentState& before = world.agents[c.agent_id];
    if (!before.alive || !c.move_to) continue;
    const Vec2 delta = *c.move_to - before.position;
    const double dist = delta.Norm();
    if (dist == 0.0) continue;
    Vec2 pos = dist <= params.speed ? *c.move_to
                                    : before.position + delta / dist * params.speed;
    pos = world.arena.Clamp(pos);
    if (world.arena.Blocked(pos) || pos == before.position) continue;
    AgentState& a = next.agents[c.agent_id];
    a.position = pos;
    a.energy -= a.side == Side::kExplorer ? params.explorer_step_energy
                                          : params.alien_step_energy;
  }

  for (const Command& c : commands) {
    AgentState& a = next.agents[c.agent_id];
    if (!world.agents[c.agent_id].alive || !c.communicate) continue;
    if (a.side == Side::kExplorer) a.energy -= params.explorer_comm_energy;
  }

  for (const Command& c : commands) {
    if (!c.attack_target) continue;
    const AgentState& attacker = world.agents[c.agent_id];
    const AgentState& target = world.agents[*c.attack_target];
    if (!attacker.alive || !target.alive || attacker.side == target.side) {
      continue;
    }
    const Vec2 from = next.agents[attacker.id].position;
    const Vec2 to = next.agents[target.id].position;
    if (Distance(from, to) > attacker.attack_radius) continue;
    const bool explorer = attacker.side == Side::kExplorer;
    const double damage =
        explorer ? params.alien_attacked_hp : params.explorer_attacked_hp;
    next.agents[attacker.id].energy -=
        explorer ? params.explorer_attack_energy : params.alien_attack_energy;
    next.agents[target.id].hp -= damage;
    next.log.push_back({tick, attacker.id, target.id, attacker.side, damage});
  }

  for (AgentState& a : next.agents) {
    a.energy = std::clamp(a.energy, 0.0, 100.0);
    a.hp = std::clamp(a.hp, 0.0, 100.0);
    a.alive = a.alive && a.hp > 0.0 && a.energy > 0.0;
  }
  next.tick = tick + 1;
  return next;
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kOngoing: return "ongoing";
    case Outcome::kExplorersWin: return "explorers_win";
    case Outcome::kAliensWin: return "aliens_win";
    case Outcome::kDraw: return "draw";
  }
  return "unknown";
}

Outcome Evaluate(const WorldState& world, int tick_limit) {
  if (world.LivingCount(Side::kExplorer) == 0) return Outcome::kAliensWin;
  if (world.LivingCount(Side::kAlien) == 0) return Outcome::kExplorersWin;
  const ArenaConfig& arena = world.arena;
  bool held = false;
  bool contested = false;
  for (const AgentState& a : world.agents) {
    if (!a.alive) continue;
    const double d = Distance(a.position, arena.treasure);
    if (a.side == Side::kExplorer) {
      held = held || d <= arena.treasure_radius;
    } else {
      contested = contested ||
                  d <= arena.treasure_radius + arena.engagement_range;
    }
  }
  if (held && !contested) return Outcome::kExplorersWin;
  if (world.tick >= tick_limit) return Outcome::kDraw;
  return Outcome::kOngoing;
}

std::string FormatSnapshot(const WorldState& world) {
  std::string out;
  for (const AgentState& a : world.agents) {
    out += fmt::format("{} {} {:.4f} {:.4f} {:.4f} {:.4f} {}\n", a.id,
                       SideName(a.side), a.position.x, a.position.y, a.energy,
                       a.hp, a.alive ? 1 : 0);
  }
  return out;
}

double TravelEnergy(const ArenaConfig& arena, Vec2 from, Vec2 to,
                    const CombatParams& params, int max_ticks) {
  WorldState world;
  world.arena = arena;
  world.agents.push_back({0, Side::kExplorer, from});
  for (int t = 0; t < max_ticks; ++t) {
    const AgentState& a = world.agents[0];
    if (Distance(a.position, to) <= 1e-9) return 100.0 - a.energy;
    const Command c{0, AvoidObstacles(a.position, to, arena.obstacles), {}, false};
    world = Step(world, std::span<const Command>(&c, 1), params);
    if (!world.agents[0].alive) break;
  }
  throw Error(ErrorCode::kNoPath, "did not reach the destination");
}

}  // namespace gut::explore

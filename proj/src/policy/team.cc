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

#include "gut/policy/team.h"

#include <algorithm>
#include <limits>
#include <tuple>
#include <numeric>
#include <numbers>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::policy {
namespace {

using explore::AgentState;
using explore::Circle;
using explore::Command;
using explore::ExploreContext;
using explore::FormationKind;
using explore::Side;
using explore::Vec2;
using explore::WorldState;

struct Assessment {
  ExploreContext ctx;
  // Observed aliens ordered by each TargetRule, best first.
  std::array<std::vector<int>, 3> ranked;
  double unit_hp = 0.0;
};

Vec2 Centroid(const WorldState& world, std::span<const int> ids) {
  Vec2 sum;
  for (int id : ids) sum += world.agent(id).position;
  return ids.empty() ? sum : sum / static_cast<double>(ids.size());
}

// Pushes `p` out of any obstacle it lies in, onto the clearance ring.
Vec2 SafeGoal(const explore::ArenaConfig& arena, Vec2 p) {
  for (const Circle& c : arena.obstacles) {
    const double ring = c.radius + explore::kDefaultClearance * 1.01;
    if (explore::Distance(p, c.center) < ring) {
      p = c.center + (p - c.center).Normalized() * ring;
    }
  }
  return arena.Clamp(p);
}

Vec2 Waypoint(const WorldState& world, Vec2 from, Vec2 to) {
  const Vec2 goal = SafeGoal(world.arena, to);
  if (world.arena.Blocked(goal)) return from;
  return explore::AvoidObstacles(from, goal, world.arena.obstacles);
}

std::vector<int> Living(const WorldState& world, Side side) {
  std::vector<int> out;
  for (const AgentState& a : world.agents) {
    if (a.alive && a.side == side) out.push_back(a.id);
  }
  return out;
}


double MeanEnergy(const WorldState& world, std::span<const int> ids) {
  double sum = 0.0;
  for (int id : ids) sum += world.agent(id).energy;
  return ids.empty() ? 0.0 : sum / static_cast<double>(ids.size());
}

// Distance from the closest member to `p`: where the group meets an alien.
double ContactDistance(const WorldState& world, std::span<const int> members,
                       Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (int id : members) {
    best = std::min(best, explore::Distance(world.agent(id).position, p));
  }
  return best;
}

Assessment Assess(const WorldState& world, std::span<const int> members,
                  std::span<const int> observed,
                  std::span<const explore::CombatEvent> history, InfoMode info,
                  const TeamParams& params, std::mt19937_64& rng) {
  Assessment out;
  ExploreContext& ctx = out.ctx;
  ctx.explorers = static_cast<int>(members.size());
  ctx.aliens = static_cast<int>(observed.size());
  ctx.explorer_energy = MeanEnergy(world, members);
  ctx.coeffs = params.utility;
  for (int id : members) ctx.phi_e += world.agent(id).attack_radius;
  ctx.phi_e /= std::max<double>(1.0, static_cast<double>(members.size()));
  for (int id : observed) ctx.phi_m += world.agent(id).attack_radius;
  ctx.phi_m /= std::max<double>(1.0, static_cast<double>(observed.size()));

  const AdversaryEstimate est = ObserveAdversary(
      history, world.tick, params.observation_window, params.priors);
  out.unit_hp = est.hp_uc;

  std::vector<double> energy(observed.size());
  if (info == InfoMode::kComplete) {
    for (std::size_t j = 0; j < observed.size(); ++j) {
      energy[j] = world.agent(observed[j]).energy;
    }
    ctx.alien_energy = MeanEnergy(world, observed);
  } else {
    ctx.alien_energy =
        Predict(info, est.hp_uc, est.hp_asc, params.regression, &rng).e_el;
    for (std::size_t j = 0; j < observed.size(); ++j) {
      const double loss = 100.0 - world.agent(observed[j]).hp;
      energy[j] = Predict(info, est.hp_uc, loss, params.regression, &rng).e_el;
    }
  }
  ctx.alien_energy = std::clamp(ctx.alien_energy, 1.0, 100.0);

  const Vec2 center = Centroid(world, members);
  std::vector<double> dist(observed.size());
  std::vector<double> ability(observed.size());
  for (std::size_t j = 0; j < observed.size(); ++j) {
    const AgentState& a = world.agent(observed[j]);
    dist[j] = explore::Distance(center, a.position);
    ability[j] = a.hp * std::clamp(energy[j], 0.0, 100.0) / 100.0;
  }
  std::vector<std::size_t> order(observed.size());
  auto rank = [&](auto less) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), less);
    std::vector<int> ids;
    for (std::size_t j : order) ids.push_back(observed[j]);
    return ids;
  };
  out.ranked[explore::kNearest] = rank(
      [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  out.ranked[explore::kLowestAbility] = rank([&](std::size_t a, std::size_t b) {
    return ability[a] != ability[b] ? ability[a] < ability[b] : dist[a] < dist[b];
  });
  out.ranked[explore::kHighestAbility] = rank([&](std::size_t a, std::size_t b) {
    return ability[a] != ability[b] ? ability[a] > ability[b] : dist[a] < dist[b];
  });
  if (!observed.empty()) {
    for (int r = 0; r < 3; ++r) {
      const int id = out.ranked[r][0];
      ctx.target_ids[r] = id;
      ctx.target_distance[r] = explore::Distance(center, world.agent(id).position);
    }
  }
  return out;
}

void PlanAll(GroupDecision& g, Plan plan) {
  plan.squad = g.members;
  for (int id : g.members) g.plans[id] = plan;
}

void PlanPatrol(GroupDecision& g) { PlanAll(g, Plan{Order::kPatrol}); }

// Assigns each member to one of `targets`, nearest pairs first, with squad
// sizes differing by at most one.
std::vector<std::vector<int>> Split(const WorldState& world,
                                    const std::vector<int>& members,
                                    const std::vector<int>& targets) {
  const std::size_t n = members.size();
  const std::size_t parts = std::min(targets.size(), n);
  std::vector<std::vector<int>> out(parts);
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < parts; ++j) {
      pairs.emplace_back(explore::Distance(world.agent(members[i]).position,
                                           world.agent(targets[j]).position),
                         i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  const std::size_t base = n / parts;
  std::size_t larger = n % parts;
  std::vector<bool> placed(n, false);
  for (const auto& [d, i, j] : pairs) {
    if (placed[i]) continue;
    const std::size_t size = out[j].size();
    if (size > base || (size == base && larger == 0)) continue;
    if (size == base) --larger;
    out[j].push_back(members[i]);
    placed[i] = true;
  }
  for (auto& squad : out) std::sort(squad.begin(), squad.end());
  return out;
}

// Most common living, observed target among the squad's previous attack
// plans, lowest id on ties; -1 when there is none.
int EngagedTarget(const WorldState& world, std::span<const int> squad,
                  std::span<const int> observed,
                  const std::map<int, Plan>& previous) {
  std::map<int, int> votes;
  for (int id : squad) {
    auto it = previous.find(id);
    if (it == previous.end() || it->second.order != Order::kAttack) continue;
    const int t = it->second.target;
    if (!world.HasAgent(t) || !world.agent(t).alive) continue;
    if (std::find(observed.begin(), observed.end(), t) == observed.end()) continue;
    ++votes[t];
  }
  int best = -1;
  for (const auto& [t, n] : votes) {
    if (best < 0 || n > votes[best]) best = t;
  }
  return best;
}

// Plans a tactic plus a movement choice: the single explorer move
// (DeltaSpeed/DeltaDirection) or the group shape (Triangle/Diamond).
void PlanMovement(GroupDecision& g, int target, std::size_t tactic,
                  std::size_t move) {
  if (tactic == explore::kDefend) {
    PlanAll(g, Plan{Order::kDefend, target});
    return;
  }
  Plan plan{Order::kAttack, target};
  if (g.members.size() == 1) {
    plan.sidestep = move == explore::kDeltaDirection;
  } else if (move == explore::kDiamond) {
    plan.approach = FormationKind::kDefendPolygon;
  }
  PlanAll(g, plan);
}

int LowestHp(const WorldState& world, std::span<const int> ids) {
  int best = -1;
  for (int id : ids) {
    if (best < 0 || world.agent(id).hp < world.agent(best).hp) best = id;
  }
  return best;
}

std::vector<GroupDecision> Groups(CoopMode mode, const WorldState& world) {
  std::vector<GroupDecision> out;
  for (auto& members : DecisionGroups(mode, world)) {
    GroupDecision g;
    g.observed = ObservedAliens(world, members);
    g.members = std::move(members);
    out.push_back(std::move(g));
  }
  return out;
}

// Nearest living opponent of `self` within `radius`, or -1.
int NearestOpponent(const WorldState& world, const AgentState& self,
                    double radius) {
  int best = -1;
  double best_d = radius;
  for (const AgentState& o : world.agents) {
    if (!o.alive || o.side == self.side) continue;
    const double d = explore::Distance(self.position, o.position);
    if (d <= best_d) {
      best_d = d;
      best = o.id;
    }
  }
  return best;
}

}  // namespace

CoopMode CoopModeOf(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kGutNC: return CoopMode::kNC;
    case PolicyKind::kGutFC: return CoopMode::kFC;
    default: return CoopMode::kPC;
  }
}

void TeamParams::Validate() const {
  if (epoch_ticks < 1 || observation_window < 1) {
    throw Error(ErrorCode::kConfigError, "epoch and window must be >= 1");
  }
  if (gut_levels != 2 && gut_levels != 3) {
    throw Error(ErrorCode::kConfigError,
                fmt::format("gut_levels must be 2 or 3, got {}", gut_levels));
  }
  if (!(attack_spacing > 0) || !(defend_spacing > 0)) {
    throw Error(ErrorCode::kConfigError, "formation spacing must be > 0");
  }
  if (baseline.c1 < 0 || baseline.c2 < 0) {
    throw Error(ErrorCode::kConfigError, "baseline weights must be >= 0");
  }
  utility.Validate();
}

std::vector<std::vector<int>> DecisionGroups(CoopMode mode,
                                             const WorldState& world) {
  const std::vector<int> living = Living(world, Side::kExplorer);
  std::vector<std::vector<int>> out;
  if (living.empty()) return out;
  if (mode == CoopMode::kNC) {
    for (int id : living) out.push_back({id});
    return out;
  }
  if (mode == CoopMode::kFC) {
    out.push_back(living);
    return out;
  }
  std::vector<std::size_t> parent(living.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < living.size(); ++i) {
    const AgentState& a = world.agent(living[i]);
    for (std::size_t j = i + 1; j < living.size(); ++j) {
      const AgentState& b = world.agent(living[j]);
      const double d = explore::Distance(a.position, b.position);
      if (d <= a.sense_radius && d <= b.sense_radius) {
        parent[find(j)] = find(i);
      }
    }
  }
  std::map<std::size_t, std::vector<int>> components;
  for (std::size_t i = 0; i < living.size(); ++i) {
    components[find(i)].push_back(living[i]);
  }
  for (auto& [root, ids] : components) out.push_back(std::move(ids));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ObservedAliens(const WorldState& world,
                                std::span<const int> members) {
  std::vector<int> out;
  for (const AgentState& a : world.agents) {
    if (!a.alive || a.side != Side::kAlien) continue;
    for (int id : members) {
      const AgentState& e = world.agent(id);
      if (explore::Distance(e.position, a.position) <= e.sense_radius) {
        out.push_back(a.id);
        break;
      }
    }
  }
  return out;
}

ExploreContext BuildContext(const WorldState& world,
                            std::span<const int> members,
                            std::span<const int> observed,
                            std::span<const explore::CombatEvent> history,
                            InfoMode info, const TeamParams& params,
                            std::mt19937_64& rng) {
  return Assess(world, members, observed, history, info, params, rng).ctx;
}

std::vector<GroupDecision> DecideGut(
    CoopMode mode, const WorldState& world,
    std::span<const explore::CombatEvent> history,
    const tree::GutTree<ExploreContext>& tree, InfoMode info,
    const TeamParams& params, std::mt19937_64& rng,
    const std::map<int, Plan>& previous) {
  std::vector<GroupDecision> out = Groups(mode, world);
  for (GroupDecision& g : out) {
    if (g.observed.empty()) {
      PlanPatrol(g);
      continue;
    }
    const Assessment a =
        Assess(world, g.members, g.observed, history, info, params, rng);
    g.context = a.ctx;
    g.series = tree::Descend(tree, a.ctx);
    const auto& levels = g.series->levels;
    if (levels[0].choice.row == explore::kDefend) {
      PlanAll(g, Plan{Order::kDefend, a.ranked[explore::kNearest][0]});
      continue;
    }
    if (tree.depth() == 2) {
      PlanMovement(g, a.ranked[explore::kNearest][0], explore::kAttack,
                   levels[1].choice.row);
      continue;
    }
    const auto& ranked = a.ranked[levels[1].choice.row];
    const std::size_t parts = levels[2].choice.row + 1;
    std::vector<int> targets;
    for (std::size_t j = 0; j < parts; ++j) targets.push_back(ranked[j % ranked.size()]);
    const auto squads = Split(world, g.members, targets);
    for (std::size_t j = 0; j < squads.size(); ++j) {
      Plan plan{Order::kAttack, EngagedTarget(world, squads[j], g.observed, previous)};
      if (plan.target < 0) plan.target = targets[j];
      plan.squad = squads[j];
      for (int id : squads[j]) g.plans[id] = plan;
    }
  }
  return out;
}

std::vector<GroupDecision> DecideGreedyQmix(
    const WorldState& world, std::span<const explore::CombatEvent> history,
    InfoMode info, const TeamParams& params, std::mt19937_64& rng) {
  std::vector<GroupDecision> out = Groups(CoopMode::kPC, world);
  for (GroupDecision& g : out) {
    if (g.observed.empty()) {
      PlanPatrol(g);
      continue;
    }
    const Assessment a =
        Assess(world, g.members, g.observed, history, info, params, rng);
    g.context = a.ctx;
    const double w =
        explore::WinProbability(a.ctx.explorer_energy, a.ctx.alien_energy,
                                a.ctx.explorers, a.ctx.aliens, params.greedy_a);
    const int target = LowestHp(world, g.observed);
    PlanAll(g, Plan{w > params.greedy_threshold ? Order::kAttack : Order::kDefend,
                    target});
  }
  return out;
}

std::vector<GroupDecision> DecideBaseline(
    PolicyKind kind, const WorldState& world,
    std::span<const explore::CombatEvent> history, InfoMode info,
    const TeamParams& params, std::mt19937_64& rng) {
  if (kind != PolicyKind::kRandomBaseline &&
      kind != PolicyKind::kGreedyOneLevel) {
    throw Error(ErrorCode::kInvalidArgument, "not a baseline policy");
  }
  std::vector<GroupDecision> out = Groups(CoopMode::kPC, world);
  for (GroupDecision& g : out) {
    if (g.observed.empty()) {
      PlanPatrol(g);
      continue;
    }
    const Assessment a =
        Assess(world, g.members, g.observed, history, info, params, rng);
    const ExploreContext& ctx = a.ctx;
    g.context = ctx;
    // Strategy i is tactic i / 2 with movement choice i % 2.
    const bool single = ctx.explorers == 1;
    std::size_t choice = 0;
    if (kind == PolicyKind::kRandomBaseline) {
      // Means are ranks: defending and changing speed cost the least energy;
      // defending and changing direction risk the least HP.
      constexpr std::array<BaselineStrategy, 4> kStrategies{
          BaselineStrategy{3.0, 4.0}, BaselineStrategy{4.0, 3.0},
          BaselineStrategy{1.0, 2.0}, BaselineStrategy{2.0, 1.0}};
      const double to_goal = explore::Distance(Centroid(world, g.members),
                                               world.arena.treasure);
      choice = DecideRandom(kStrategies, {to_goal, ctx.aliens, a.unit_hp},
                            params.baseline, rng);
    } else {
      // One level: the security win utility of each tactic times the HP
      // utility of each movement choice against following aliens.
      const matgame::PayoffMatrix w = explore::BuildLevel1(ctx);
      const matgame::PayoffMatrix hp = single ? explore::BuildLevel2Single(ctx)
                                              : explore::BuildLevel2Multi(ctx);
      std::array<double, 4> win{};
      std::array<double, 4> health{};
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t t = i / 2;
        win[i] = std::clamp(std::min(w(t, 0), w(t, 1)), 0.0, 1.0);
        health[i] = 1.0 + hp(i % 2, explore::kFollow);
      }
      choice = DecideGreedyOneLevel(win, health);
    }
    g.baseline_choice = choice;
    PlanMovement(g, ctx.target_ids[explore::kNearest], choice / 2, choice % 2);
  }
  return out;
}

std::vector<Command> ExplorerCommands(const WorldState& world,
                                      const std::map<int, Plan>& plans,
                                      const TeamParams& params) {
  const Vec2 treasure = world.arena.treasure;
  std::vector<Command> out;
  for (const AgentState& self : world.agents) {
    if (!self.alive || self.side != Side::kExplorer) continue;
    Command cmd{self.id};
    Plan plan;
    if (auto it = plans.find(self.id); it != plans.end()) plan = it->second;

    std::vector<int> squad;
    for (int id : plan.squad) {
      if (world.HasAgent(id) && world.agent(id).alive) squad.push_back(id);
    }
    if (squad.empty()) squad.push_back(self.id);
    const Vec2 center = Centroid(world, squad);

    if (plan.order == Order::kAttack &&
        (!world.HasAgent(plan.target) || !world.agent(plan.target).alive)) {
      plan.target = NearestOpponent(world, self, self.sense_radius);
      if (plan.target < 0) plan.order = Order::kPatrol;
    }

    if (plan.order == Order::kDefend && world.HasAgent(plan.target) &&
        world.agent(plan.target).alive &&
        ContactDistance(world, squad, world.agent(plan.target).position) <=
            params.converge_range) {
      // Hold a polygon around the squad centroid, facing a close threat.
      const AgentState& target = world.agent(plan.target);
      if (explore::Distance(self.position, target.position) <= self.attack_radius) {
        cmd.attack_target = target.id;
      }
      Vec2 goal = self.position;
      const explore::Formation f{FormationKind::kDefendPolygon, params.defend_spacing};
      for (const auto& slot : explore::FormationTargets(
               f, squad, center, target.position - center)) {
        if (slot.id == self.id) goal = slot.position;
      }
      cmd.move_to = Waypoint(world, self.position, goal);
    } else if (plan.order == Order::kAttack) {
      const AgentState& target = world.agent(plan.target);
      const double d = explore::Distance(self.position, target.position);
      if (d <= self.attack_radius) {
        cmd.attack_target = target.id;
      } else {
        Vec2 goal = target.position;
        if (d > params.converge_range) {
          const Vec2 heading = target.position - center;
          if (squad.size() > 1) {
            const explore::Formation f{plan.approach, params.attack_spacing};
            for (const auto& slot :
                 explore::FormationTargets(f, squad, target.position, heading)) {
              if (slot.id == self.id) goal = slot.position;
            }
          } else if (plan.sidestep) {
            goal = goal + heading.Normalized().Perp() * params.sidestep;
          }
        }
        cmd.move_to = Waypoint(world, self.position, goal);
      }
    } else {
      const double to_treasure = explore::Distance(center, treasure);
      Vec2 goal;
      if (to_treasure <= 1.5 || squad.size() == 1) {
        const explore::Formation f{explore::FormationKind::kTreasureCircle,
                                   params.defend_spacing};
        goal = treasure;
        if (squad.front() != self.id) {
          for (const auto& slot : explore::FormationTargets(f, squad, treasure)) {
            if (slot.id == self.id) goal = slot.position;
          }
        }
      } else {
        const Vec2 heading = treasure - center;
        const Vec2 anchor = center + heading.Normalized() * std::min(0.5, to_treasure);
        const explore::Formation f{plan.order == Order::kDefend
                                       ? explore::FormationKind::kDefendPolygon
                                       : explore::FormationKind::kPatrol,
                                   params.defend_spacing};
        for (const auto& slot : explore::FormationTargets(f, squad, anchor, heading)) {
          if (slot.id == self.id) goal = slot.position;
        }
      }
      cmd.move_to = Waypoint(world, self.position, goal);
    }
    if (!cmd.attack_target) {
      // Opportunistic fire at the weakest alien already in range.
      std::vector<int> in_range;
      for (const AgentState& o : world.agents) {
        if (o.alive && o.side == Side::kAlien &&
            explore::Distance(self.position, o.position) <= self.attack_radius) {
          in_range.push_back(o.id);
        }
      }
      if (!in_range.empty()) cmd.attack_target = LowestHp(world, in_range);
    }
    out.push_back(cmd);
  }
  return out;
}

ExplorerTeam::ExplorerTeam(PolicyKind kind, InfoMode info, TeamParams params)
    : kind_(kind),
      info_(info),
      params_(std::move(params)),
      tree_(params_.gut_levels == 2 ? explore::MakeTwoLevelTree()
                                    : explore::MakeThreeLevelTree()) {
  params_.Validate();
}

bool ExplorerTeam::NeedsReplan(const WorldState& world) const {
  if (planned_at_ < 0 || world.tick - planned_at_ >= params_.epoch_ticks) {
    return true;
  }
  const int living =
      world.LivingCount(Side::kExplorer) + world.LivingCount(Side::kAlien);
  if (living != living_at_plan_) return true;
  for (const AgentState& e : world.agents) {
    if (!e.alive || e.side != Side::kExplorer) continue;
    auto it = seen_.find(e.id);
    for (const AgentState& a : world.agents) {
      if (!a.alive || a.side != Side::kAlien) continue;
      if (explore::Distance(e.position, a.position) > e.sense_radius) continue;
      if (it == seen_.end() ||
          !std::binary_search(it->second.begin(), it->second.end(), a.id)) {
        return true;
      }
    }
  }
  return false;
}

std::vector<Command> ExplorerTeam::Act(
    const WorldState& world, std::span<const explore::CombatEvent> history,
    std::mt19937_64& rng) {
  bool replanned = false;
  if (NeedsReplan(world)) {
    switch (kind_) {
      case PolicyKind::kGutNC:
      case PolicyKind::kGutPC:
      case PolicyKind::kGutFC:
        decisions_ = DecideGut(CoopModeOf(kind_), world, history, tree_, info_,
                               params_, rng, plans_);
        break;
      case PolicyKind::kGreedyQmixPC:
        decisions_ = DecideGreedyQmix(world, history, info_, params_, rng);
        break;
      case PolicyKind::kRandomBaseline:
      case PolicyKind::kGreedyOneLevel:
        decisions_ = DecideBaseline(kind_, world, history, info_, params_, rng);
        break;
    }
    plans_.clear();
    seen_.clear();
    for (const GroupDecision& g : decisions_) {
      for (const auto& [id, plan] : g.plans) {
        plans_[id] = plan;
        seen_[id] = g.observed;
      }
    }
    planned_at_ = world.tick;
    living_at_plan_ =
        world.LivingCount(Side::kExplorer) + world.LivingCount(Side::kAlien);
    ++replans_;
    replanned = true;
  }
  std::vector<Command> cmds = ExplorerCommands(world, plans_, params_);
  if (replanned && CoopModeOf(kind_) != CoopMode::kNC) {
    std::map<int, std::size_t> group_size;
    for (const GroupDecision& g : decisions_) {
      for (int id : g.members) group_size[id] = g.members.size();
    }
    for (Command& c : cmds) c.communicate = group_size[c.agent_id] > 1;
  }
  return cmds;
}

std::vector<Command> AlienCommands(const WorldState& world, AlienMode mode,
                                   double greedy_a, std::mt19937_64& rng) {
  std::vector<Command> out;
  std::uniform_int_distribution<int> action(0, 2);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const AgentState& self : world.agents) {
    if (!self.alive || self.side != Side::kAlien) continue;
    Command cmd{self.id};
    const int nearest = NearestOpponent(world, self, self.sense_radius);
    const int in_range = NearestOpponent(world, self, self.attack_radius);
    if (mode == AlienMode::kRandom) {
      const int pick = action(rng);
      const double heading = angle(rng);
      if (pick == 0) {
        const Vec2 goal =
            nearest >= 0 ? world.agent(nearest).position
                         : self.position + Vec2{std::cos(heading), std::sin(heading)};
        cmd.move_to = Waypoint(world, self.position, goal);
      } else if (pick == 2 && in_range >= 0) {
        cmd.attack_target = in_range;
      }
      out.push_back(cmd);
      continue;
    }

    if (nearest < 0) {
      out.push_back(cmd);
      continue;
    }
    std::vector<int> allies;
    std::vector<int> foes;
    for (const AgentState& o : world.agents) {
      if (!o.alive) continue;
      if (explore::Distance(o.position, self.position) > self.sense_radius) continue;
      (o.side == Side::kAlien ? allies : foes).push_back(o.id);
    }
    const double w = explore::WinProbability(
        MeanEnergy(world, allies), std::max(MeanEnergy(world, foes), 1e-9),
        static_cast<int>(allies.size()), static_cast<int>(foes.size()), greedy_a);
    if (w > 0.5) {
      const int target = LowestHp(world, foes);
      const AgentState& t = world.agent(target);
      if (explore::Distance(self.position, t.position) <= self.attack_radius) {
        cmd.attack_target = target;
      } else {
        cmd.move_to = Waypoint(world, self.position, t.position);
        if (in_range >= 0) cmd.attack_target = in_range;
      }
    } else {
      const Vec2 away = self.position - world.agent(nearest).position;
      cmd.move_to = Waypoint(world, self.position,
                             self.position + away.Normalized());
      if (in_range >= 0) cmd.attack_target = in_range;
    }
    out.push_back(cmd);
  }
  return out;
}

}  // namespace gut::policy

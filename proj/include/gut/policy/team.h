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

#ifndef GUT_POLICY_TEAM_H_
#define GUT_POLICY_TEAM_H_

#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gut/explore/payoff.h"
#include "gut/explore/world.h"
#include "gut/policy/policy.h"
#include "gut/tree.h"

namespace gut::policy {

enum class CoopMode { kNC, kPC, kFC };

CoopMode CoopModeOf(PolicyKind kind);

struct TeamParams {
  int epoch_ticks = 10;
  int observation_window = 200;
  AdversaryEstimate priors{0.15, 0.0};
  int gut_levels = 3;  // 3 or 2
  double attack_spacing = 0.2;
  double defend_spacing = 0.3;
  double converge_range = 1.0;  // leave the formation slot inside this range
  double sidestep = 0.5;
  double greedy_threshold = 0.5;
  double greedy_a = 1.0;

  explore::UtilityCoeffs utility;
  RegressionCoeffs regression;
  BaselineCoeffs baseline;

  void Validate() const;
};

enum class Order { kPatrol, kAttack, kDefend };

struct Plan {
  Order order = Order::kPatrol;
  int target = -1;
  std::vector<int> squad;  // explorers moving in one formation
  explore::FormationKind approach = explore::FormationKind::kAttackTriangle;
  bool sidestep = false;
  bool operator==(const Plan&) const = default;
};

struct GroupDecision {
  std::vector<int> members;   // explorers pooling observations
  std::vector<int> observed;  // living aliens any member senses
  std::optional<explore::ExploreContext> context;
  std::optional<tree::StrategySeries> series;
  std::size_t baseline_choice = 0;
  std::map<int, Plan> plans;  // by explorer id
};

// Living explorers partitioned into decision groups: singletons (NC),
// mutual-sensing connected components (PC) or everyone (FC). Members and
// groups are sorted by id.
std::vector<std::vector<int>> DecisionGroups(CoopMode mode,
                                             const explore::WorldState& world);

// Living aliens within sense range of any member, sorted by id.
std::vector<int> ObservedAliens(const explore::WorldState& world,
                                std::span<const int> members);

// The context one group feeds to the payoff builders. Incomplete modes
// replace alien energies with predictions drawn from `rng`.
explore::ExploreContext BuildContext(const explore::WorldState& world,
                                     std::span<const int> members,
                                     std::span<const int> observed,
                                     std::span<const explore::CombatEvent> history,
                                     InfoMode info, const TeamParams& params,
                                     std::mt19937_64& rng);

// One descent per decision group. Attack squads whose members already
// engage a living observed alien under `previous` keep that target; the
// Level 2 rule picks targets only for fresh squads.
std::vector<GroupDecision> DecideGut(
    CoopMode mode, const explore::WorldState& world,
    std::span<const explore::CombatEvent> history,
    const tree::GutTree<explore::ExploreContext>& tree, InfoMode info,
    const TeamParams& params, std::mt19937_64& rng,
    const std::map<int, Plan>& previous = {});

std::vector<GroupDecision> DecideGreedyQmix(
    const explore::WorldState& world,
    std::span<const explore::CombatEvent> history, InfoMode info,
    const TeamParams& params, std::mt19937_64& rng);

std::vector<GroupDecision> DecideBaseline(
    PolicyKind kind, const explore::WorldState& world,
    std::span<const explore::CombatEvent> history, InfoMode info,
    const TeamParams& params, std::mt19937_64& rng);

// Per-tick commands realising `plans` for every living explorer.
std::vector<explore::Command> ExplorerCommands(
    const explore::WorldState& world, const std::map<int, Plan>& plans,
    const TeamParams& params);

// Replans on epoch boundaries, deaths and new sightings; issues commands
// every tick.
class ExplorerTeam {
 public:
  ExplorerTeam(PolicyKind kind, InfoMode info, TeamParams params);

  std::vector<explore::Command> Act(const explore::WorldState& world,
                                    std::span<const explore::CombatEvent> history,
                                    std::mt19937_64& rng);

  const std::vector<GroupDecision>& last_decisions() const { return decisions_; }
  int replans() const { return replans_; }

 private:
  bool NeedsReplan(const explore::WorldState& world) const;

  PolicyKind kind_;
  InfoMode info_;
  TeamParams params_;
  tree::GutTree<explore::ExploreContext> tree_;
  std::vector<GroupDecision> decisions_;
  std::map<int, Plan> plans_;
  std::map<int, std::vector<int>> seen_;  // explorer -> aliens at plan time
  int planned_at_ = -1;
  int living_at_plan_ = -1;
  int replans_ = 0;
};

std::vector<explore::Command> AlienCommands(const explore::WorldState& world,
                                            AlienMode mode, double greedy_a,
                                            std::mt19937_64& rng);

}  // namespace gut::policy

#endif  // GUT_POLICY_TEAM_H_

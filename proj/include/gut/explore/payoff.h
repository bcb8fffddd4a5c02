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

#ifndef GUT_EXPLORE_PAYOFF_H_
#define GUT_EXPLORE_PAYOFF_H_

#include <array>
#include <span>

#include "gut/explore/utility.h"
#include "gut/matgame.h"
#include "gut/tree.h"

namespace gut::explore {

// Strategy indices. Explorers are always the row (maximizing) player.
enum Tactic { kAttack = 0, kDefend = 1 };
enum TargetRule { kNearest = 0, kLowestAbility = 1, kHighestAbility = 2 };
enum AlienLink { kIndependent = 0, kDependent = 1 };
enum SingleMove { kDeltaSpeed = 0, kDeltaDirection = 1 };
enum MultiShape { kTriangle = 0, kDiamond = 1 };
enum AlienReaction { kFollow = 0, kRetreat = 1 };

// What one deciding group knows when it builds its payoff matrices.
struct ExploreContext {
  int explorers = 0;             // n, deciding group size
  int aliens = 0;                // m, observed aliens
  double explorer_energy = 100;  // t_e, group mean
  double alien_energy = 100;     // t_a, observed or predicted mean
  // Per TargetRule: alien id picked by that rule and its distance from the
  // group centroid. The alien team's spearhead is picked by the same rules.
  std::array<int, 3> target_ids{-1, -1, -1};
  std::array<double, 3> target_distance{0, 0, 0};
  double phi_e = 0.0;  // explorer attack radius
  double phi_m = 0.0;  // alien attack radius
  int engage_cap = 6;  // attackers that fit around a single target
  UtilityCoeffs coeffs;
};

// 2x2 of winning utilities. Mutual attack engages full counts; any cell
// with a defender trades at parity.
matgame::PayoffMatrix BuildLevel1(const ExploreContext& ctx);

// 3x3 of energy utilities over target rule x alien spearhead rule. The
// distance halves when the spearhead is the explorers' own target.
matgame::PayoffMatrix BuildLevel2(const ExploreContext& ctx);

// 3x2 of HP utilities over One/Two/Three explorer subgroups x alien
// Independent/Dependent. `tactic` halves the engaged explorers on kDefend.
matgame::PayoffMatrix BuildLevel3(const ExploreContext& ctx, int tactic);

// 2x2 of HP utilities, single explorer: DeltaSpeed/DeltaDirection x
// Follow/Retreat.
matgame::PayoffMatrix BuildLevel2Single(const ExploreContext& ctx);

// 2x2 of HP utilities, group: Triangle/Diamond x Follow/Retreat.
matgame::PayoffMatrix BuildLevel2Multi(const ExploreContext& ctx);

// Attack/Defend, Who, How.
tree::GutTree<ExploreContext> MakeThreeLevelTree();

// Attack/Defend, then the single or multi explorer movement game.
tree::GutTree<ExploreContext> MakeTwoLevelTree();

}  // namespace gut::explore

#endif  // GUT_EXPLORE_PAYOFF_H_

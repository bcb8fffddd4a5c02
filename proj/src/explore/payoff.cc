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

#include "gut/explore/payoff.h"

#include <algorithm>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::explore {
namespace {

using matgame::PayoffMatrix;

int Half(int count) { return (count + 1) / 2; }

void RequireTeams(const ExploreContext& ctx) {
  if (ctx.explorers < 1 || ctx.aliens < 1) {
    throw Error(ErrorCode::kBuilderFailure,
                fmt::format("empty team: {} explorers, {} aliens",
                            ctx.explorers, ctx.aliens));
  }
}

}  // namespace

PayoffMatrix BuildLevel1(const ExploreContext& ctx) {
  RequireTeams(ctx);
  const int n = ctx.explorers;
  const int m = ctx.aliens;
  auto w = [&](int explorers, int aliens) {
    return WinningUtility(ctx.explorer_energy, ctx.alien_energy, explorers,
                          aliens, ctx.coeffs.a);
  };
  // A defender holds a formation front and trades one for one, so only
  // mutual attack brings both full counts to bear.
  const double parity = w(1, 1);
  return PayoffMatrix{{w(n, m), parity}, {parity, parity}};
}

PayoffMatrix BuildLevel2(const ExploreContext& ctx) {
  RequireTeams(ctx);
  std::vector<double> entries;
  entries.reserve(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      double d = ctx.target_distance[r];
      if (ctx.target_ids[r] == ctx.target_ids[c]) d *= 0.5;
      entries.push_back(EnergyUtility(ctx.explorers, ctx.aliens, d,
                                      ctx.coeffs.b0, ctx.coeffs.b1));
    }
  }
  return PayoffMatrix(3, 3, std::move(entries));
}

PayoffMatrix BuildLevel3(const ExploreContext& ctx, int tactic) {
  RequireTeams(ctx);
  const int available =
      tactic == kDefend ? Half(ctx.explorers) : ctx.explorers;
  std::vector<double> entries;
  entries.reserve(6);
  for (int groups = 1; groups <= 3; ++groups) {
    const int k = std::min(available, groups * ctx.engage_cap);
    for (int link : {kIndependent, kDependent}) {
      const int g = std::min(ctx.aliens, link == kDependent ? 2 * groups : groups);
      entries.push_back(HpUtility(k, g, ctx.phi_e, ctx.phi_m, ctx.coeffs));
    }
  }
  return PayoffMatrix(3, 2, std::move(entries));
}

PayoffMatrix BuildLevel2Single(const ExploreContext& ctx) {
  RequireTeams(ctx);
  const UtilityCoeffs& c = ctx.coeffs;
  const double retreat = HpUtility(0, 0, ctx.phi_e, ctx.phi_m, c);
  return PayoffMatrix{
      {HpUtility(1, ctx.aliens, ctx.phi_e, ctx.phi_m, c), retreat},
      {HpUtility(1, Half(ctx.aliens), ctx.phi_e, ctx.phi_m, c), retreat}};
}

PayoffMatrix BuildLevel2Multi(const ExploreContext& ctx) {
  RequireTeams(ctx);
  const UtilityCoeffs& c = ctx.coeffs;
  const double retreat = HpUtility(0, 0, ctx.phi_e, ctx.phi_m, c);
  return PayoffMatrix{
      {HpUtility(ctx.explorers, ctx.aliens, ctx.phi_e, ctx.phi_m, c), retreat},
      {HpUtility(Half(ctx.explorers), Half(ctx.aliens), ctx.phi_e, ctx.phi_m, c),
       retreat}};
}

tree::GutTree<ExploreContext> MakeThreeLevelTree() {
  using Upstream = std::span<const tree::LevelChoice>;
  std::vector<tree::LevelSpec<ExploreContext>> levels;
  levels.push_back({{"attack", "defend"},
                    {"attack", "defend"},
                    [](const ExploreContext& ctx, Upstream) {
                      return BuildLevel1(ctx);
                    }});
  levels.push_back({{"nearest", "lowest_ability", "highest_ability"},
                    {"nearest", "lowest_ability", "highest_ability"},
                    [](const ExploreContext& ctx, Upstream) {
                      return BuildLevel2(ctx);
                    }});
  levels.push_back({{"one_group", "two_groups", "three_groups"},
                    {"independent", "dependent"},
                    [](const ExploreContext& ctx, Upstream up) {
                      return BuildLevel3(ctx, static_cast<int>(up[0].row));
                    }});
  return tree::GutTree<ExploreContext>(std::move(levels));
}

tree::GutTree<ExploreContext> MakeTwoLevelTree() {
  using Upstream = std::span<const tree::LevelChoice>;
  std::vector<tree::LevelSpec<ExploreContext>> levels;
  levels.push_back({{"attack", "defend"},
                    {"attack", "defend"},
                    [](const ExploreContext& ctx, Upstream) {
                      return BuildLevel1(ctx);
                    }});
  // Label sets coincide in size; the context picks single or multi.
  levels.push_back({{"delta_speed|triangle", "delta_direction|diamond"},
                    {"follow", "retreat"},
                    [](const ExploreContext& ctx, Upstream) {
                      return ctx.explorers == 1 ? BuildLevel2Single(ctx)
                                                : BuildLevel2Multi(ctx);
                    }});
  return tree::GutTree<ExploreContext>(std::move(levels));
}

}  // namespace gut::explore

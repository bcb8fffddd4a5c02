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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gut/error.h"
#include "gut/explore/payoff.h"
#include "gut/explore/utility.h"
#include "gut/explore/world.h"
#include "gut/matgame.h"
#include "gut/needs.h"
#include "gut/tree.h"

namespace gut::explore {
namespace {

using matgame::PayoffMatrix;

// Composite Simpson integral of (n - m) x N(x; d, 1) over d +- 12 sigma.
double EnergyQuadrature(int n, int m, double d, double b0, double b1) {
  const int intervals = 4000;
  const double lo = d - 12.0;
  const double hi = d + 12.0;
  const double h = (hi - lo) / intervals;
  auto f = [&](double x) {
    const double z = x - d;
    return (n - m) * x * std::exp(-0.5 * z * z) / std::sqrt(2 * std::numbers::pi);
  };
  double sum = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return b0 + b1 * sum * h / 3.0;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("winning_utility examples") {
  CHECK(WinningUtility(40, 40, 3, 7, 1.0) == doctest::Approx(1.0));
  CHECK(WinningUtility(10, 90, 4, 0, 1.0) == 1.0);
  CHECK(WinningUtility(50, 100, 2, 4, 1.0) == doctest::Approx(0.25));
  CHECK(WinProbability(100, 50, 1, 2, 1.0) == 1.0);
  CHECK(CodeOf([] { WinningUtility(50, 0, 1, 1, 1); }) == ErrorCode::kDomainError);
  CHECK(CodeOf([] { WinningUtility(50, 50, 0, 1, 1); }) == ErrorCode::kDomainError);
}

TEST_CASE("winning_utility is monotone in both energies") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> energy(1.0, 100.0);
  std::uniform_int_distribution<int> count(1, 30);
  for (int i = 0; i < 500; ++i) {
    const double te = energy(rng);
    const double ta = energy(rng);
    const int n = count(rng);
    const int m = count(rng);
    const double base = WinningUtility(te, ta, n, m, 0.5);
    CHECK(WinningUtility(te * 1.01, ta, n, m, 0.5) > base);
    CHECK(WinningUtility(te, ta * 1.01, n, m, 0.5) < base);
  }
}

TEST_CASE("energy_utility examples") {
  CHECK(EnergyUtility(4, 4, 3.5, 0.7, 2.0) == 0.7);
  CHECK(EnergyUtility(9, 2, 3.5, 0.7, 0.0) == 0.7);
  CHECK(EnergyUtility(3, 1, 2.0, 0.0, 1.0) == doctest::Approx(4.0));
  CHECK(EnergyQuadrature(3, 1, 2.0, 0.0, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("energy_utility matches quadrature of the gaussian integral") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(0, 30);
  std::uniform_real_distribution<double> real(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const int n = count(rng);
    const int m = count(rng);
    const double d = real(rng);
    const double b0 = real(rng);
    const double b1 = real(rng);
    CHECK(std::abs(EnergyUtility(n, m, d, b0, b1) -
                   EnergyQuadrature(n, m, d, b0, b1)) <= 1e-6);
  }
}

TEST_CASE("hp_utility examples") {
  UtilityCoeffs c;
  c.c0 = 0.3;
  CHECK(HpUtility(0, 0, 0.5, 0.7, c) == 0.3);
  c.h_m = 0.1;
  c.h_e = 0.2;
  c.lambda_m = {2.0, 0.0};
  c.lambda_e = {1.0, 0.0};
  CHECK(HpUtility(5, 5, 0.5, 0.7, c) == doctest::Approx(0.3));

  UtilityCoeffs ex;
  ex.h_m = 0.15;
  ex.h_e = 0.05;
  CHECK(HpUtility(2, 1, 0.0, 0.0, ex) == doctest::Approx(0.25));
}

TEST_CASE("combat parameter defaults") {
  CombatParams p;
  CHECK(p.explorer_step_energy == 0.015);
  CHECK(p.explorer_comm_energy == 0.006);
  CHECK(p.explorer_attack_energy == 0.01);
  CHECK(p.explorer_attacked_hp == 0.15);
  CHECK(p.alien_attack_energy == 0.03);
  CHECK(p.alien_attacked_hp == 0.05);
  p.Validate();
  p.speed = 0.0;
  CHECK(CodeOf([&] { p.Validate(); }) == ErrorCode::kConfigError);
}

ExploreContext SampleContext() {
  ExploreContext ctx;
  ctx.explorers = 5;
  ctx.aliens = 4;
  ctx.explorer_energy = 80;
  ctx.alien_energy = 90;
  ctx.target_ids = {3, 5, 3};
  ctx.target_distance = {1.0, 2.5, 1.0};
  return ctx;
}

TEST_CASE("level 1 with equal energies is constant and picks attack") {
  ExploreContext ctx = SampleContext();
  ctx.coeffs.a = 1.0;
  ctx.explorer_energy = ctx.alien_energy = 70;
  const PayoffMatrix w = BuildLevel1(ctx);
  CHECK(w.rows() == 2);
  CHECK(w.cols() == 2);
  CHECK(w.MinEntry() == w.MaxEntry());
  auto sol = matgame::Solve(w);
  CHECK(sol.kind == matgame::SolutionKind::kPure);
  CHECK(sol.row_strategy.ArgMax() == kAttack);
  CHECK(sol.col_strategy.ArgMax() == kAttack);
}

TEST_CASE("level 1 entries come from the winning utility") {
  ExploreContext ctx = SampleContext();
  const PayoffMatrix w = BuildLevel1(ctx);
  const double r = 80.0 / 90.0;
  CHECK(w(0, 0) == doctest::Approx(0.5 * std::pow(r, 4.0 / 5.0)));
  CHECK(w(0, 1) == doctest::Approx(0.5 * r));
  CHECK(w(1, 0) == doctest::Approx(0.5 * r));
  CHECK(w(1, 1) == doctest::Approx(0.5 * r));
}

TEST_CASE("level 1 attacks unless outnumbered while weaker") {
  ExploreContext ctx = SampleContext();  // n=5, m=4, t_e < t_a
  CHECK(matgame::Solve(BuildLevel1(ctx)).row_strategy.ArgMax() == kAttack);
  ctx.aliens = 8;
  CHECK(matgame::Solve(BuildLevel1(ctx)).row_strategy.ArgMax() == kDefend);
}

TEST_CASE("level 2 with equal team sizes is constant b0") {
  ExploreContext ctx = SampleContext();
  ctx.aliens = ctx.explorers;
  ctx.coeffs.b0 = 1.25;
  const PayoffMatrix e = BuildLevel2(ctx);
  CHECK(e.rows() == 3);
  CHECK(e.cols() == 3);
  for (double v : e.entries()) CHECK(v == 1.25);
}

TEST_CASE("level 2 halves the distance to an advancing target") {
  const PayoffMatrix e = BuildLevel2(SampleContext());
  CHECK(e(0, 0) == doctest::Approx(0.5));
  CHECK(e(0, 1) == doctest::Approx(1.0));
  CHECK(e(0, 2) == doctest::Approx(0.5));
  CHECK(e(1, 1) == doctest::Approx(1.25));
  CHECK(e(1, 0) == doctest::Approx(2.5));
}

TEST_CASE("level 3 with no hit exchange is constant c0") {
  ExploreContext ctx = SampleContext();
  ctx.coeffs.c0 = -0.4;
  ctx.coeffs.c1 = 0.0;
  const PayoffMatrix hp = BuildLevel3(ctx, kAttack);
  CHECK(hp.rows() == 3);
  CHECK(hp.cols() == 2);
  for (double v : hp.entries()) CHECK(v == -0.4);
}

TEST_CASE("level 3 counts engaged explorers and aliens") {
  ExploreContext ctx = SampleContext();
  ctx.explorers = 20;
  ctx.aliens = 3;
  const UtilityCoeffs& c = ctx.coeffs;
  const PayoffMatrix attack = BuildLevel3(ctx, kAttack);
  CHECK(attack(0, 0) == doctest::Approx(HpUtility(6, 1, 0, 0, c)));
  CHECK(attack(1, 1) == doctest::Approx(HpUtility(12, 3, 0, 0, c)));
  CHECK(attack(2, 0) == doctest::Approx(HpUtility(18, 3, 0, 0, c)));
  const PayoffMatrix defend = BuildLevel3(ctx, kDefend);
  CHECK(defend(2, 0) == doctest::Approx(HpUtility(10, 3, 0, 0, c)));
}

TEST_CASE("builders reject empty teams") {
  ExploreContext ctx = SampleContext();
  ctx.aliens = 0;
  CHECK(CodeOf([&] { BuildLevel1(ctx); }) == ErrorCode::kBuilderFailure);
  CHECK(CodeOf([&] { BuildLevel2(ctx); }) == ErrorCode::kBuilderFailure);
  CHECK(CodeOf([&] { BuildLevel3(ctx, kAttack); }) == ErrorCode::kBuilderFailure);
  CHECK(CodeOf([&] { BuildLevel2Multi(ctx); }) == ErrorCode::kBuilderFailure);
}

TEST_CASE("single and multi movement games") {
  ExploreContext ctx = SampleContext();
  ctx.coeffs.c0 = ctx.coeffs.c1 = 0.0;
  for (const PayoffMatrix& z : {BuildLevel2Single(ctx), BuildLevel2Multi(ctx)}) {
    CHECK(z.rows() == 2);
    for (double v : z.entries()) CHECK(v == 0.0);
    CHECK(matgame::Solve(z).value == 0.0);
  }

  ExploreContext sym = SampleContext();
  sym.explorers = sym.aliens = 1;
  sym.coeffs.h_e = sym.coeffs.h_m = 0.1;
  const PayoffMatrix s = BuildLevel2Single(sym);
  CHECK(s.MinEntry() == s.MaxEntry());
  auto sol = matgame::Solve(s);
  CHECK(sol.row_strategy.ArgMax() == 0);
  CHECK(sol.col_strategy.ArgMax() == 0);
}

TEST_CASE("aliens retreat when following is worse for them in both rows") {
  ExploreContext ctx = SampleContext();
  ctx.explorers = 1;
  ctx.aliens = 2;
  ctx.phi_m = 4.0;
  ctx.coeffs.h_m = ctx.coeffs.h_e = 0.1;
  const PayoffMatrix z = BuildLevel2Single(ctx);
  // Enumerate: the follow column beats retreat for the row player everywhere.
  for (std::size_t r = 0; r < 2; ++r) CHECK(z(r, kFollow) > z(r, kRetreat));
  auto sol = matgame::Solve(z);
  CHECK(sol.col_strategy.ArgMax() == kRetreat);
  CHECK(sol.col_strategy.IsPure());
}

TEST_CASE("explore trees descend with positive joint probability") {
  ExploreContext ctx = SampleContext();
  auto three = tree::Descend(MakeThreeLevelTree(), ctx);
  CHECK(three.levels.size() == 3);
  CHECK(three.joint_probability > 0.0);
  auto two = tree::Descend(MakeTwoLevelTree(), ctx);
  CHECK(two.levels.size() == 2);
  ctx.explorers = 1;
  CHECK(tree::Descend(MakeTwoLevelTree(), ctx).joint_probability > 0.0);
}

WorldState Duel(double gap) {
  WorldState w;
  w.agents.push_back({0, Side::kExplorer, {2.0, 2.0}});
  w.agents.push_back({1, Side::kAlien, {2.0 + gap, 2.0}});
  return w;
}

TEST_CASE("step with no commands is the identity") {
  const WorldState w = Duel(3.0);
  const WorldState next = Step(w, {}, CombatParams{});
  CHECK(FormatSnapshot(next) == FormatSnapshot(w));
  CHECK(next.log.empty());
  CHECK(next.tick == 1);
}

TEST_CASE("single attacks cost exactly the combat constants") {
  const CombatParams p;
  const WorldState w = Duel(0.3);

  const Command explorer_hits[] = {{0, std::nullopt, 1, false}};
  const WorldState a = Step(w, explorer_hits, p);
  CHECK(a.agents[0].energy == 100.0 - 0.01);
  CHECK(a.agents[0].hp == 100.0);
  CHECK(a.agents[1].hp == 100.0 - 0.05);
  CHECK(a.agents[1].energy == 100.0);
  REQUIRE(a.log.size() == 1);
  CHECK(a.log[0].hp_damage == 0.05);

  const Command alien_hits[] = {{1, std::nullopt, 0, false}};
  const WorldState b = Step(w, alien_hits, p);
  CHECK(b.agents[1].energy == 100.0 - 0.03);
  CHECK(b.agents[0].hp == 100.0 - 0.15);
  CHECK(b.agents[0].energy == 100.0);
}

TEST_CASE("moving and communicating cost energy") {
  const CombatParams p;
  const WorldState w = Duel(3.0);
  const Command cmds[] = {{0, Vec2{0.0, 2.0}, std::nullopt, true},
                          {1, Vec2{9.0, 2.0}, std::nullopt, false}};
  const WorldState next = Step(w, cmds, p);
  CHECK(next.agents[0].position.x == doctest::Approx(1.95));
  CHECK(next.agents[0].energy == doctest::Approx(100.0 - 0.015 - 0.006));
  CHECK(next.agents[1].energy == 100.0 - 0.005);
}

TEST_CASE("out of range attacks and unknown agents") {
  const WorldState w = Duel(3.0);
  const Command far[] = {{0, std::nullopt, 1, false}};
  CHECK(Step(w, far, {}).log.empty());
  const Command bad[] = {{9, std::nullopt, std::nullopt, false}};
  CHECK(CodeOf([&] { Step(w, bad, {}); }) == ErrorCode::kUnknownAgent);
  const Command bad_target[] = {{0, std::nullopt, 9, false}};
  CHECK(CodeOf([&] { Step(w, bad_target, {}); }) == ErrorCode::kUnknownAgent);
}

TEST_CASE("dead agents never move, attack or get hit") {
  WorldState w = Duel(0.3);
  w.agents.push_back({2, Side::kExplorer, {2.1, 2.0}});
  w.agents[1].hp = 0.0;
  w.agents[1].alive = false;
  const Command cmds[] = {{1, Vec2{5, 5}, 0, false},
                          {0, std::nullopt, 1, false},
                          {2, std::nullopt, 1, false}};
  const WorldState next = Step(w, cmds, {});
  CHECK(next.agents[1].position == w.agents[1].position);
  CHECK(next.agents[0].hp == 100.0);
  CHECK(next.agents[0].energy == 100.0);
  CHECK(next.log.empty());
}

TEST_CASE("random ticks conserve energy and hp") {
  const CombatParams p;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  WorldState w;
  for (int i = 0; i < 10; ++i) {
    w.agents.push_back({i, i < 5 ? Side::kExplorer : Side::kAlien,
                        {coord(rng), coord(rng)}});
  }
  for (int tick = 0; tick < 300; ++tick) {
    std::vector<Command> cmds;
    std::uniform_int_distribution<int> other(0, 9);
    for (int i = 0; i < 10; ++i) {
      cmds.push_back({i, Vec2{coord(rng), coord(rng)}, other(rng), tick % 2 == 0});
    }
    const WorldState next = Step(w, cmds, p);
    for (int i = 0; i < 10; ++i) {
      const AgentState& a = w.agents[i];
      const AgentState& b = next.agents[i];
      int attacks = 0;
      int hits = 0;
      for (const CombatEvent& e : next.log) {
        attacks += e.attacker == i;
        hits += e.target == i;
      }
      const bool explorer = a.side == Side::kExplorer;
      const double max_energy =
          (explorer ? p.explorer_step_energy + p.explorer_comm_energy
                    : p.alien_step_energy) +
          attacks * (explorer ? p.explorer_attack_energy : p.alien_attack_energy);
      const double max_hp =
          hits * (explorer ? p.explorer_attacked_hp : p.alien_attacked_hp);
      CHECK(b.energy <= a.energy);
      CHECK(b.hp <= a.hp);
      CHECK(a.energy - b.energy <= max_energy + 1e-12);
      CHECK(a.hp - b.hp <= max_hp + 1e-12);
      if (!a.alive) CHECK(b.position == a.position);
      CHECK(b.alive == (b.hp > 0 && b.energy > 0));
    }
    w = next;
  }
}

TEST_CASE("outcome examples") {
  WorldState w = Duel(3.0);
  CHECK(Evaluate(w, 100) == Outcome::kOngoing);
  w.tick = 100;
  CHECK(Evaluate(w, 100) == Outcome::kDraw);

  WorldState dead = Duel(3.0);
  dead.agents[0].alive = false;
  CHECK(Evaluate(dead, 100) == Outcome::kAliensWin);

  WorldState won = Duel(3.0);
  won.agents[1].alive = false;
  won.agents[0].position = won.arena.treasure;
  CHECK(Evaluate(won, 100) == Outcome::kExplorersWin);

  WorldState contested = Duel(0.0);
  contested.agents[0].position = contested.arena.treasure;
  contested.agents[1].position = contested.arena.treasure + Vec2{1.2, 0};
  CHECK(Evaluate(contested, 100) == Outcome::kOngoing);
  contested.agents[1].position = contested.arena.treasure + Vec2{-4, 0};
  CHECK(Evaluate(contested, 100) == Outcome::kExplorersWin);
}

TEST_CASE("snapshot lists one agent per line") {
  const WorldState w = Duel(1.0);
  CHECK(FormatSnapshot(w) ==
        "0 explorer 2.0000 2.0000 100.0000 100.0000 1\n"
        "1 alien 3.0000 2.0000 100.0000 100.0000 1\n");
}

TEST_CASE("arena validation") {
  ArenaConfig arena;
  arena.obstacles = TwoMountains();
  arena.Validate();
  arena.obstacles.push_back({arena.treasure, 0.2});
  CHECK(CodeOf([&] { arena.Validate(); }) == ErrorCode::kConfigError);
  ArenaConfig outside;
  outside.treasure = {20, 1};
  CHECK(CodeOf([&] { outside.Validate(); }) == ErrorCode::kConfigError);
}

TEST_CASE("an obstacle on the path is an adversary to the explorer") {
  const CombatParams p;
  ArenaConfig open;
  ArenaConfig mountain;
  const Vec2 from{1.0, 1.0};
  const Vec2 to = open.treasure;
  mountain.obstacles.push_back({(from + to) / 2.0, 1.0});
  const double without = TravelEnergy(open, from, to, p);
  const double with = TravelEnergy(mountain, from, to, p);
  CHECK(with > without);
  CHECK(needs::ClassifyRelation(without, with) == needs::Relation::kAdversary);
}

}  // namespace
}  // namespace gut::explore

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

#include "gut/tree.h"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gut/synthetic_tree.h"

namespace gut::tree {
namespace {

using matgame::PayoffMatrix;

struct Ctx {
  double scale = 1.0;
};

LevelSpec<Ctx> Constant(PayoffMatrix m, std::vector<std::string> rows,
                        std::vector<std::string> cols) {
  return {std::move(rows), std::move(cols),
          [m](const Ctx&, std::span<const LevelChoice>) { return m; }};
}

const PayoffMatrix kSaddle{{2, 1}, {3, 4}};
const PayoffMatrix kRps{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
const PayoffMatrix kPennies{{1, -1}, {-1, 1}};

TEST_CASE("tree construction validates levels") {
  CHECK_THROWS_AS(GutTree<Ctx>({}), Error);
  CHECK_THROWS_AS(GutTree<Ctx>({LevelSpec<Ctx>{{}, {"a"}, nullptr}}), Error);
}

TEST_CASE("descend single 1x1 level") {
  GutTree<Ctx> tree({Constant(PayoffMatrix{{4.0}}, {"only"}, {"only"})});
  auto s = Descend(tree, Ctx{});
  REQUIRE(s.levels.size() == 1);
  CHECK(s.levels[0].choice == LevelChoice{0, 0});
  CHECK(s.joint_probability == 1.0);
}

TEST_CASE("descend saddle then rock-paper-scissors") {
  GutTree<Ctx> tree({Constant(kSaddle, {"a0", "a1"}, {"b0", "b1"}),
                     Constant(kRps, {"R", "P", "S"}, {"R", "P", "S"})});
  auto s = Descend(tree, Ctx{});
  REQUIRE(s.levels.size() == 2);
  CHECK(s.levels[0].choice == LevelChoice{1, 0});
  CHECK(s.levels[0].row_label == "a1");
  CHECK(s.levels[0].probability == 1.0);
  CHECK(s.levels[1].choice == LevelChoice{0, 0});
  CHECK(s.levels[1].row_label == "R");
  CHECK(s.levels[1].probability == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(s.joint_probability == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(JointProbability(s) == s.joint_probability);
}

TEST_CASE("descend conditions each level on the cell above") {
  // Level 2 flips sign depending on the level-1 row.
  LevelSpec<Ctx> second{{"x", "y"}, {"u", "v"},
                        [](const Ctx&, std::span<const LevelChoice> up) {
                          REQUIRE(up.size() == 1);
                          const double s = up[0].row == 1 ? 1.0 : -1.0;
                          return PayoffMatrix{{s * 5, s * 6}, {s * 1, s * 2}};
                        }};
  GutTree<Ctx> tree({Constant(kSaddle, {"a0", "a1"}, {"b0", "b1"}), second});
  auto s = Descend(tree, Ctx{});
  // Upstream row 1 -> [[5,6],[1,2]] has its saddle at (0, 0).
  CHECK(s.levels[1].choice == LevelChoice{0, 0});
  CHECK(s.levels[1].solution.value == 5.0);
}

TEST_CASE("all-pure trees have joint probability one") {
  GutTree<Ctx> tree({Constant(kSaddle, {"a", "b"}, {"c", "d"}),
                     Constant(PayoffMatrix{{1, 0}, {3, 2}}, {"a", "b"}, {"c", "d"}),
                     Constant(PayoffMatrix{{7}}, {"z"}, {"z"})});
  CHECK(Descend(tree, Ctx{}).joint_probability == 1.0);
}

TEST_CASE("joint probability of a single mixed 2x2 level") {
  GutTree<Ctx> tree({Constant(kPennies, {"H", "T"}, {"H", "T"})});
  auto s = Descend(tree, Ctx{});
  CHECK(s.levels[0].choice == LevelChoice{0, 0});
  CHECK(JointProbability(s) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("builder failures are reported as BuilderFailure") {
  SUBCASE("builder throws") {
    GutTree<Ctx> tree({LevelSpec<Ctx>{
        {"a"}, {"b"}, [](const Ctx&, std::span<const LevelChoice>) -> PayoffMatrix {
          throw std::runtime_error("no aliens in view");
        }}});
    try {
      Descend(tree, Ctx{});
      FAIL("expected BuilderFailure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBuilderFailure);
    }
  }
  SUBCASE("builder returns the wrong shape") {
    GutTree<Ctx> tree({Constant(kRps, {"a", "b"}, {"c", "d"})});
    try {
      Descend(tree, Ctx{});
      FAIL("expected BuilderFailure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBuilderFailure);
    }
  }
}

TEST_CASE("sampling selection needs an rng and is reproducible") {
  GutTree<Ctx> tree({Constant(kRps, {"R", "P", "S"}, {"R", "P", "S"})});
  CHECK_THROWS_AS(Descend(tree, Ctx{}, {.selection = Selection::kSample}), Error);
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    auto sa = Descend(tree, Ctx{}, {.selection = Selection::kSample, .rng = &a});
    auto sb = Descend(tree, Ctx{}, {.selection = Selection::kSample, .rng = &b});
    CHECK(sa == sb);
    CHECK(sa.joint_probability == doctest::Approx(1.0 / 9));
  }
}

TEST_CASE("flatten of a single level is the level itself") {
  GutTree<Ctx> tree({Constant(kRps, {"R", "P", "S"}, {"R", "P", "S"})});
  CHECK(Flatten(tree, Ctx{}) == kRps);
}

TEST_CASE("flatten enumerates additive path utilities") {
  const PayoffMatrix top{{1, 2}, {3, 4}};
  LevelSpec<Ctx> second{{"x", "y"}, {"u", "v"},
                        [](const Ctx&, std::span<const LevelChoice> up) {
                          const double base = 10.0 * (2 * up[0].row + up[0].col);
                          return PayoffMatrix{{base + 0.1, base + 0.2},
                                              {base + 0.3, base + 0.4}};
                        }};
  GutTree<Ctx> tree({Constant(top, {"a", "b"}, {"c", "d"}), second});
  PayoffMatrix flat = Flatten(tree, Ctx{});
  REQUIRE(flat.rows() == 4);
  REQUIRE(flat.cols() == 4);
  // Hand oracle: composite row = 2*g1 + g2, composite col = 2*k1 + k2.
  const double second_level[2][2] = {{0.1, 0.2}, {0.3, 0.4}};
  for (int g1 = 0; g1 < 2; ++g1)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int g2 = 0; g2 < 2; ++g2)
        for (int k2 = 0; k2 < 2; ++k2) {
          const double expected = top(g1, k1) + 10.0 * (2 * g1 + k1) +
                                  second_level[g2][k2];
          CHECK(flat(2 * g1 + g2, 2 * k1 + k2) == doctest::Approx(expected));
        }
  CHECK(flat(3, 2) == doctest::Approx(4 + 30 + 0.3));
}

TEST_CASE("flatten with a zero second level keeps the top value") {
  const PayoffMatrix top{{3, 0}, {1, 2}};
  GutTree<Ctx> tree({Constant(top, {"a", "b"}, {"c", "d"}),
                     Constant(PayoffMatrix::Filled(2, 3, 0.0), {"x", "y"},
                              {"u", "v", "w"})});
  auto flat_value = matgame::Solve(Flatten(tree, Ctx{})).value;
  CHECK(flat_value == doctest::Approx(matgame::Solve(top).value).epsilon(1e-9));
}

TEST_CASE("flatten enforces its cell cap") {
  auto tree = MakeUniformSyntheticTree(1, 3, 5);  // 125 x 125
  try {
    Flatten(tree, SyntheticContext{});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  CHECK(Flatten(tree, SyntheticContext{}, 125 * 125).rows() == 125);
}

TEST_CASE("time_compare returns positive medians") {
  auto tree = MakeUniformSyntheticTree(9, 2, 2);
  auto t = TimeCompare(tree, SyntheticContext{}, 100);
  CHECK(t.gut.count() > 0);
  CHECK(t.flat.count() > 0);
  CHECK_THROWS_AS(TimeCompare(tree, SyntheticContext{}, 0), Error);
}

TEST_CASE("property: random descents have positive joint probability") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<std::size_t> depth(1, 4), size(2, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    SyntheticTreeOptions opt;
    opt.seed = rng();
    const std::size_t w = depth(rng);
    for (std::size_t i = 0; i < w; ++i) opt.sizes.push_back({size(rng), size(rng)});
    auto tree = MakeSyntheticTree(opt);
    auto s = Descend(tree, SyntheticContext{});
    REQUIRE(s.joint_probability > 0.0);
    REQUIRE(s.levels.size() == w);
    std::vector<LevelChoice> upstream;
    for (std::size_t i = 0; i < w; ++i) {
      const auto& level = s.levels[i];
      REQUIRE(level.probability > 0.0);
      REQUIRE(level.probability <= 1.0);
      auto m = tree.level(i).build(SyntheticContext{}, upstream);
      auto gap = matgame::ComputeBestResponseGap(m, level.solution.row_strategy,
                                                 level.solution.col_strategy);
      REQUIRE(gap.Max() <= matgame::kDefaultEpsilon);
      upstream.push_back(level.choice);
    }
  }
}

TEST_CASE("property: descents are deterministic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto tree = MakeUniformSyntheticTree(seed, 3, 3);
    CHECK(Descend(tree, SyntheticContext{}) == Descend(tree, SyntheticContext{}));
  }
}

TEST_CASE("property: independent pure levels agree with the flat game") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> depth(1, 3), size(2, 4);
  std::uniform_real_distribution<double> u(-10, 10);
  int checked = 0;
  while (checked < 300) {
    // Rejection-sample independent levels until each has a saddle.
    std::vector<LevelSpec<Ctx>> levels;
    const std::size_t w = depth(rng);
    while (levels.size() < w) {
      const std::size_t r = size(rng), c = size(rng);
      std::vector<double> e(r * c);
      for (double& v : e) v = u(rng);
      PayoffMatrix m(r, c, e);
      if (!matgame::FindPureSaddle(m)) continue;
      levels.push_back(Constant(m, std::vector<std::string>(r, "r"),
                                std::vector<std::string>(c, "c")));
    }
    GutTree<Ctx> tree(levels);
    auto series = Descend(tree, Ctx{});
    std::size_t row = 0, col = 0;
    for (std::size_t i = 0; i < w; ++i) {
      row = row * tree.level(i).row_labels.size() + series.levels[i].choice.row;
      col = col * tree.level(i).col_labels.size() + series.levels[i].choice.col;
    }
    PayoffMatrix flat = Flatten(tree, Ctx{});
    // Brute force: the composite cell is a row minimum and a column maximum.
    for (std::size_t k = 0; k < flat.cols(); ++k) {
      REQUIRE(flat(row, col) <= flat(row, k) + 1e-12);
    }
    for (std::size_t g = 0; g < flat.rows(); ++g) {
      REQUIRE(flat(row, col) >= flat(g, col) - 1e-12);
    }
    ++checked;
  }
}

}  // namespace
}  // namespace gut::tree

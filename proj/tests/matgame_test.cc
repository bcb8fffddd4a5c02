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

#include "gut/matgame.h"

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gut/error.h"

namespace gut::matgame {
namespace {

// Independent oracles. Neither touches the solver.

struct Cell {
  std::size_t row, col;
  double value;
};

// First cell (row-major) that is simultaneously its row's minimum and its
// column's maximum.
std::optional<Cell> EnumerateSaddle(const PayoffMatrix& m) {
  for (std::size_t g = 0; g < m.rows(); ++g) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      bool row_min = true, col_max = true;
      for (std::size_t j = 0; j < m.cols(); ++j) row_min &= m(g, k) <= m(g, j);
      for (std::size_t i = 0; i < m.rows(); ++i) col_max &= m(g, k) >= m(i, k);
      if (row_min && col_max) return Cell{g, k, m(g, k)};
    }
  }
  return std::nullopt;
}

// Closed-form equalizing strategies of a 2x2 game without a saddle.
struct TwoByTwo {
  double x0, y0, value;
};
TwoByTwo Equalize(double a, double b, double c, double d) {
  const double den = a - b - c + d;
  return {(d - c) / den, (d - b) / den, (a * d - b * c) / den};
}

PayoffMatrix RandomMatrix(std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> e(rows * cols);
  for (double& v : e) v = u(rng);
  return PayoffMatrix(rows, cols, std::move(e));
}

TEST_CASE("payoff matrix validation") {
  CHECK_THROWS_AS(PayoffMatrix(0, 2, {}), Error);
  CHECK_THROWS_AS(PayoffMatrix(2, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(PayoffMatrix(1, 1, {std::nan("")}), Error);
  CHECK_THROWS_AS((PayoffMatrix{{1, 2}, {3}}), Error);
  PayoffMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 0) == 4);
}

TEST_CASE("mixed strategy validation") {
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.6}), Error);
  CHECK_THROWS_AS(MixedStrategy({1.5, -0.5}), Error);
  CHECK_NOTHROW(MixedStrategy({0.25, 0.75}));
  CHECK(MixedStrategy({0.2, 0.4, 0.4}).ArgMax() == 1);
  CHECK(MixedStrategy::Pure(3, 2).IsPure());
}

TEST_CASE("find_pure_saddle examples") {
  auto one = FindPureSaddle(PayoffMatrix{{7.5}});
  REQUIRE(one);
  CHECK(one->row == 0);
  CHECK(one->col == 0);
  CHECK(one->value == 7.5);

  CHECK_FALSE(FindPureSaddle(PayoffMatrix{{1, -1}, {-1, 1}}));

  PayoffMatrix m{{2, 1}, {3, 4}};
  auto oracle = EnumerateSaddle(m);
  REQUIRE(oracle);
  auto s = FindPureSaddle(m);
  REQUIRE(s);
  CHECK(s->row == 1);
  CHECK(s->col == 0);
  CHECK(s->value == 3);
  CHECK(s->row == oracle->row);
  CHECK(s->col == oracle->col);
}

TEST_CASE("degenerate constant matrix saddles at origin") {
  auto s = FindPureSaddle(PayoffMatrix::Filled(3, 4, 2.0));
  REQUIRE(s);
  CHECK(s->row == 0);
  CHECK(s->col == 0);
  auto sol = Solve(PayoffMatrix::Filled(3, 4, 2.0));
  CHECK(sol.kind == SolutionKind::kPure);
  CHECK(sol.row_strategy[0] == 1.0);
}

TEST_CASE("multiple saddles break ties on lowest index") {
  PayoffMatrix m{{1, 1}, {1, 1}, {0, 5}};
  auto s = FindPureSaddle(m);
  REQUIRE(s);
  CHECK(s->row == 0);
  CHECK(s->col == 0);
}

TEST_CASE("solve_mixed canonical games") {
  SUBCASE("rock paper scissors") {
    auto s = SolveMixed(PayoffMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(s.row_strategy[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));
      CHECK(s.col_strategy[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    }
    CHECK(std::abs(s.value) < 1e-12);
  }
  SUBCASE("matching pennies") {
    auto s = SolveMixed(PayoffMatrix{{1, -1}, {-1, 1}});
    CHECK(s.row_strategy[0] == doctest::Approx(0.5));
    CHECK(s.col_strategy[0] == doctest::Approx(0.5));
    CHECK(std::abs(s.value) < 1e-12);
  }
  SUBCASE("2x2 equalization") {
    auto oracle = Equalize(3, 0, 1, 2);
    CHECK(oracle.x0 == doctest::Approx(0.25));
    CHECK(oracle.y0 == doctest::Approx(0.5));
    CHECK(oracle.value == doctest::Approx(1.5));
    auto s = SolveMixed(PayoffMatrix{{3, 0}, {1, 2}});
    CHECK(s.row_strategy[0] == doctest::Approx(oracle.x0).epsilon(1e-12));
    CHECK(s.col_strategy[0] == doctest::Approx(oracle.y0).epsilon(1e-12));
    CHECK(s.value == doctest::Approx(oracle.value).epsilon(1e-12));
  }
}

TEST_CASE("solve dispatches between pure and mixed") {
  auto pure = Solve(PayoffMatrix{{2, 1}, {3, 4}});
  CHECK(pure.kind == SolutionKind::kPure);
  CHECK(pure.value == 3);
  CHECK(pure.row_strategy[1] == 1.0);
  CHECK(pure.epsilon == 0.0);

  auto mixed = Solve(PayoffMatrix{{1, -1}, {-1, 1}});
  CHECK(mixed.kind == SolutionKind::kMixed);
  CHECK(std::abs(mixed.value) < 1e-12);

  auto single = Solve(PayoffMatrix{{5}});
  CHECK(single.kind == SolutionKind::kPure);
  CHECK(single.value == 5);
}

TEST_CASE("epsilon must be positive") {
  CHECK_THROWS_AS(Solve(PayoffMatrix{{1}}, {.epsilon = 0.0}), Error);
  CHECK_THROWS_AS(SolveMixed(PayoffMatrix{{1}}, {.epsilon = -1.0}), Error);
}

TEST_CASE("pivot budget exhaustion reports NonConvergence") {
  try {
    SolveMixed(PayoffMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
               {.epsilon = 1e-6, .max_pivots = 1});
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonConvergence);
  }
}

TEST_CASE("expected_value examples") {
  PayoffMatrix mp{{1, -1}, {-1, 1}};
  CHECK(ExpectedValue(mp, MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0)) ==
        1.0);
  CHECK(ExpectedValue(mp, MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)) ==
        0.0);
  // 3*(1/4)(1/2) + 0 + 1*(3/4)(1/2) + 2*(3/4)(1/2) = 3/8 + 3/8 + 6/8.
  CHECK(ExpectedValue(PayoffMatrix{{3, 0}, {1, 2}}, MixedStrategy({0.25, 0.75}),
                      MixedStrategy({0.5, 0.5})) == doctest::Approx(1.5));
  CHECK_THROWS_AS(
      ExpectedValue(mp, MixedStrategy::Uniform(3), MixedStrategy::Uniform(2)),
      Error);
}

TEST_CASE("best_response_gap examples") {
  PayoffMatrix rps{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  auto g = ComputeBestResponseGap(rps, MixedStrategy::Uniform(3),
                                  MixedStrategy::Uniform(3));
  CHECK(std::abs(g.row) < 1e-9);
  CHECK(std::abs(g.col) < 1e-9);

  // Enumerated: E(X,Y) = 1.5; rows give 1.5, 1.5; columns give 3, 0.
  auto h = ComputeBestResponseGap(PayoffMatrix{{3, 0}, {1, 2}},
                                  MixedStrategy::Pure(2, 0),
                                  MixedStrategy({0.5, 0.5}));
  CHECK(h.row == doctest::Approx(0.0));
  CHECK(h.col == doctest::Approx(1.5));

  PayoffMatrix saddle{{2, 1}, {3, 4}};
  auto z = ComputeBestResponseGap(saddle, MixedStrategy::Pure(2, 1),
                                  MixedStrategy::Pure(2, 0));
  CHECK(z.row == 0.0);
  CHECK(z.col == 0.0);

  CHECK_THROWS_AS(ComputeBestResponseGap(saddle, MixedStrategy::Uniform(3),
                                         MixedStrategy::Uniform(2)),
                  Error);
}

TEST_CASE("property: minimax duality and reported epsilon") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    PayoffMatrix m = RandomMatrix(rng, size(rng), size(rng));
    GameSolution s = Solve(m);
    for (std::size_t g = 0; g < m.rows(); ++g) {
      double u = 0.0;
      for (std::size_t k = 0; k < m.cols(); ++k) u += m(g, k) * s.col_strategy[k];
      REQUIRE(u <= s.value + 1e-6);
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      double u = 0.0;
      for (std::size_t g = 0; g < m.rows(); ++g) u += m(g, k) * s.row_strategy[g];
      REQUIRE(u >= s.value - 1e-6);
    }
    auto gap = ComputeBestResponseGap(m, s.row_strategy, s.col_strategy);
    REQUIRE(gap.Max() <= s.epsilon + 1e-15);
    REQUIRE(std::abs(s.value - ExpectedValue(m, s.row_strategy,
                                             s.col_strategy)) < 1e-9);
  }
}

TEST_CASE("property: 2x2 mixed games match equalization formulas") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 200) {
    PayoffMatrix m = RandomMatrix(rng, 2, 2);
    if (EnumerateSaddle(m)) continue;
    auto oracle = Equalize(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    auto s = SolveMixed(m);
    REQUIRE(s.row_strategy[0] == doctest::Approx(oracle.x0).epsilon(1e-9));
    REQUIRE(s.col_strategy[0] == doctest::Approx(oracle.y0).epsilon(1e-9));
    REQUIRE(s.value == doctest::Approx(oracle.value).epsilon(1e-9));
    ++checked;
  }
}

TEST_CASE("property: saddle value agrees with the linear program") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  int saddles = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    PayoffMatrix m = RandomMatrix(rng, size(rng), size(rng));
    auto oracle = EnumerateSaddle(m);
    auto found = FindPureSaddle(m);
    REQUIRE(oracle.has_value() == found.has_value());
    if (!found) continue;
    ++saddles;
    CHECK(found->value == oracle->value);
    REQUIRE(std::abs(found->value - SolveMixed(m).value) < 1e-9);
  }
  CHECK(saddles > 100);
}

TEST_CASE("property: shift and scale equivariance") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::uniform_real_distribution<double> alpha(0.1, 5.0), beta(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    PayoffMatrix m = RandomMatrix(rng, size(rng), size(rng));
    const double a = alpha(rng), b = beta(rng);
    auto base = Solve(m);
    auto moved = Solve(m.Affine(a, b));
    REQUIRE(moved.value == doctest::Approx(a * base.value + b).epsilon(1e-6));
    for (std::size_t g = 0; g < m.rows(); ++g) {
      REQUIRE(std::abs(moved.row_strategy[g] - base.row_strategy[g]) < 1e-6);
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      REQUIRE(std::abs(moved.col_strategy[k] - base.col_strategy[k]) < 1e-6);
    }
  }
}

TEST_CASE("read_matrix parses the plain-text format") {
  std::istringstream in("2 3\n1 2 3\n-4 5.5 6\n");
  auto m = ReadMatrix(in);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 1) == 5.5);
  std::istringstream bad("2 2\n1 2 3\n");
  CHECK_THROWS_AS(ReadMatrix(bad), Error);
  std::istringstream zero("0 2\n");
  CHECK_THROWS_AS(ReadMatrix(zero), Error);
}

TEST_CASE("format_solution emits key-value lines") {
  auto text = FormatSolution(Solve(PayoffMatrix{{2, 1}, {3, 4}}));
  CHECK(text.find("kind = pure") != std::string::npos);
  CHECK(text.find("value = 3.000000000") != std::string::npos);
  CHECK(text.find("row_strategy = 0.000000000 1.000000000") !=
        std::string::npos);
}

}  // namespace
}  // namespace gut::matgame

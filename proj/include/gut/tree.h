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

#ifndef GUT_TREE_H_
#define GUT_TREE_H_

// Game-theoretic utility tree.
//
// A team strategy is decomposed into w levels. Level i is a zero-sum game
// between the ally team (rows, maximizing) and the adversary (columns)
// whose payoffs may depend on the cells selected at levels 1..i-1. A
// descent solves the levels top-down and conditions each one on the cell
// chosen above it; the product of the selected cells' equilibrium masses is
// the joint probability of the resulting strategy series.
//
// The tree is parameterized on the decision-context type handed to the
// payoff builders, so the same machinery serves the Explore Domain and the
// synthetic trees used in tests and benchmarks.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gut/error.h"
#include "gut/matgame.h"

namespace gut::tree {

// The cell selected at one level: ally row, adversary column.
struct LevelChoice {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const LevelChoice&) const = default;
};

template <typename Context>
using PayoffBuilder = std::function<matgame::PayoffMatrix(
    const Context&, std::span<const LevelChoice> upstream)>;

template <typename Context>
struct LevelSpec {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  PayoffBuilder<Context> build;
};

template <typename Context>
class GutTree {
 public:
  explicit GutTree(std::vector<LevelSpec<Context>> levels)
      : levels_(std::move(levels)) {
    if (levels_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "tree needs at least one level");
    }
    for (const auto& level : levels_) {
      if (level.row_labels.empty() || level.col_labels.empty() ||
          !level.build) {
        throw Error(ErrorCode::kInvalidArgument,
                    "every level needs labels on both sides and a builder");
      }
    }
  }

  std::size_t depth() const { return levels_.size(); }
  const LevelSpec<Context>& level(std::size_t i) const { return levels_[i]; }
  const std::vector<LevelSpec<Context>>& levels() const { return levels_; }

 private:
  std::vector<LevelSpec<Context>> levels_;
};

struct LevelOutcome {
  LevelChoice choice;
  std::string row_label;
  std::string col_label;
  matgame::GameSolution solution;
  // Equilibrium mass of the selected cell, x_row * y_col.
  double probability = 1.0;
};

struct StrategySeries {
  std::vector<LevelOutcome> levels;
  double joint_probability = 1.0;

  std::vector<LevelChoice> Choices() const;
  bool operator==(const StrategySeries& other) const;
};

enum class Selection {
  kMaxProbability,  // most likely row and column, lowest index on ties
  kSample,          // draw from the equilibrium strategies
};

struct DescendOptions {
  double epsilon = matgame::kDefaultEpsilon;
  Selection selection = Selection::kMaxProbability;
  std::mt19937_64* rng = nullptr;  // required for kSample
};

inline constexpr std::size_t kDefaultFlattenCap = 10000;

double JointProbability(const StrategySeries& series);

std::string FormatSeries(const StrategySeries& series);

namespace internal {

std::size_t SelectIndex(const matgame::MixedStrategy& s, Selection selection,
                        std::mt19937_64* rng);

template <typename Context>
matgame::PayoffMatrix BuildLevel(const GutTree<Context>& tree, std::size_t i,
                                 const Context& ctx,
                                 std::span<const LevelChoice> upstream) {
  const LevelSpec<Context>& spec = tree.level(i);
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kBuilderFailure,
                 "level " + std::to_string(i + 1) + ": " + why);
  };
  try {
    matgame::PayoffMatrix m = spec.build(ctx, upstream);
    if (m.rows() != spec.row_labels.size() ||
        m.cols() != spec.col_labels.size()) {
      throw fail("builder returned " + std::to_string(m.rows()) + "x" +
                 std::to_string(m.cols()) + " for " +
                 std::to_string(spec.row_labels.size()) + "x" +
                 std::to_string(spec.col_labels.size()) + " labels");
    }
    return m;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw fail(e.what());
  }
}

}  // namespace internal

template <typename Context>
StrategySeries Descend(const GutTree<Context>& tree, const Context& ctx,
                       const DescendOptions& options = {}) {
  if (!(options.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (options.selection == Selection::kSample && options.rng == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "sampling descent needs an rng");
  }
  StrategySeries series;
  std::vector<LevelChoice> upstream;
  upstream.reserve(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i) {
    matgame::PayoffMatrix m = internal::BuildLevel(tree, i, ctx, upstream);
    matgame::GameSolution sol =
        matgame::Solve(m, {.epsilon = options.epsilon});
    LevelChoice choice{
        internal::SelectIndex(sol.row_strategy, options.selection, options.rng),
        internal::SelectIndex(sol.col_strategy, options.selection,
                              options.rng)};
    const double p =
        sol.row_strategy[choice.row] * sol.col_strategy[choice.col];
    const auto& spec = tree.level(i);
    series.levels.push_back(LevelOutcome{choice, spec.row_labels[choice.row],
                                         spec.col_labels[choice.col],
                                         std::move(sol), p});
    upstream.push_back(choice);
  }
  series.joint_probability = JointProbability(series);
  return series;
}

// One-level game over every combination of per-level choices. A composite
// cell's utility is the sum of the level utilities along its path, with
// each level built on the choices above it. Composite indices are mixed
// radix with level 1 most significant.
template <typename Context>
matgame::PayoffMatrix Flatten(const GutTree<Context>& tree, const Context& ctx,
                              std::size_t cap = kDefaultFlattenCap) {
  std::size_t rows = 1, cols = 1;
  for (const auto& level : tree.levels()) {
    const std::size_t r = level.row_labels.size();
    const std::size_t c = level.col_labels.size();
    if (rows > cap / r || cols > cap / c || rows * r > cap / (cols * c)) {
      throw Error(ErrorCode::kCapExceeded,
                  "flattened game exceeds " + std::to_string(cap) + " cells");
    }
    rows *= r;
    cols *= c;
  }
  std::vector<double> cells(rows * cols, 0.0);
  std::vector<LevelChoice> path;
  path.reserve(tree.depth());

  // Each frame carries the composite row/col prefix and the utility so far.
  std::function<void(std::size_t, std::size_t, std::size_t, double)> walk =
      [&](std::size_t i, std::size_t row_prefix, std::size_t col_prefix,
          double acc) {
        if (i == tree.depth()) {
          cells[row_prefix * cols + col_prefix] = acc;
          return;
        }
        const matgame::PayoffMatrix m =
            internal::BuildLevel(tree, i, ctx, path);
        for (std::size_t g = 0; g < m.rows(); ++g) {
          for (std::size_t k = 0; k < m.cols(); ++k) {
            path.push_back({g, k});
            walk(i + 1, row_prefix * m.rows() + g, col_prefix * m.cols() + k,
                 acc + m(g, k));
            path.pop_back();
          }
        }
      };
  walk(0, 0, 0, 0.0);
  return matgame::PayoffMatrix(rows, cols, std::move(cells));
}

struct Timing {
  std::chrono::nanoseconds gut{0};
  std::chrono::nanoseconds flat{0};
};

namespace internal {
std::chrono::nanoseconds Median(std::vector<std::chrono::nanoseconds> v);
}  // namespace internal

// Median wall time of a descent against solving the flattened game. The
// flat game is built once outside the timed region. Meaningful only on an
// otherwise idle machine.
template <typename Context>
Timing TimeCompare(const GutTree<Context>& tree, const Context& ctx,
                   std::size_t repeats,
                   std::size_t cap = kDefaultFlattenCap) {
  if (repeats == 0) {
    throw Error(ErrorCode::kInvalidArgument, "repeats must be at least 1");
  }
  using Clock = std::chrono::steady_clock;
  const matgame::PayoffMatrix flat = Flatten(tree, ctx, cap);
  std::vector<std::chrono::nanoseconds> gut_times, flat_times;
  gut_times.reserve(repeats);
  flat_times.reserve(repeats);
  double sink = 0.0;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto t0 = Clock::now();
    sink += Descend(tree, ctx).joint_probability;
    auto t1 = Clock::now();
    sink += matgame::Solve(flat).value;
    auto t2 = Clock::now();
    gut_times.push_back(t1 - t0);
    flat_times.push_back(t2 - t1);
  }
  // Keeps the optimizer from discarding the timed calls.
  static volatile double keep;
  keep = sink;
  return Timing{internal::Median(std::move(gut_times)),
                internal::Median(std::move(flat_times))};
}

}  // namespace gut::tree

#endif  // GUT_TREE_H_

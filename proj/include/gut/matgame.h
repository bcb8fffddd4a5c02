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

#ifndef GUT_MATGAME_H_
#define GUT_MATGAME_H_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Two-player zero-sum normal-form games. The row player maximizes the
// stored utility, the column player minimizes it.

namespace gut::matgame {

inline constexpr double kDefaultEpsilon = 1e-6;

class PayoffMatrix {
 public:
  // Entries are row-major; entry (g, k) is the row player's utility when
  // playing g against column k. Throws kInvalidArgument on empty or
  // non-finite input.
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows);

  // Constant matrix.
  static PayoffMatrix Filled(std::size_t rows, std::size_t cols, double value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t g, std::size_t k) const {
    return entries_[g * cols_ + k];
  }
  std::span<const double> entries() const { return entries_; }

  double MinEntry() const;
  double MaxEntry() const;

  // alpha * M + beta, entrywise.
  PayoffMatrix Affine(double alpha, double beta) const;

  bool operator==(const PayoffMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// A probability vector over one player's pure strategies.
class MixedStrategy {
 public:
  // Throws kInvalidArgument unless every component is >= 0 and the sum is
  // 1 within 1e-9.
  explicit MixedStrategy(std::vector<double> probabilities);

  static MixedStrategy Pure(std::size_t size, std::size_t index);
  static MixedStrategy Uniform(std::size_t size);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probabilities() const { return p_; }

  // Index of the largest component; components within `tie_tol` of the
  // maximum count as ties and the lowest index wins.
  std::size_t ArgMax(double tie_tol = 1e-9) const;
  bool IsPure() const;

 private:
  std::vector<double> p_;
};

enum class SolutionKind { kPure, kMixed };

struct GameSolution {
  SolutionKind kind = SolutionKind::kMixed;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  double value = 0.0;
  // Largest unilateral gain available to either player.
  double epsilon = 0.0;
};

struct SaddlePoint {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

struct BestResponseGap {
  double row = 0.0;
  double col = 0.0;
  double Max() const { return row > col ? row : col; }
};

struct SolverOptions {
  double epsilon = kDefaultEpsilon;
  std::size_t max_pivots = 100000;
};

// Cell where the max of row minima meets the min of column maxima, lowest
// (row, col) first. Empty when the game has no pure equilibrium.
std::optional<SaddlePoint> FindPureSaddle(const PayoffMatrix& m);

// Mixed equilibrium via the maximin linear program. Throws kNonConvergence
// if the pivot budget runs out or the recovered profile misses the epsilon
// contract.
GameSolution SolveMixed(const PayoffMatrix& m,
                        const SolverOptions& options = {});

// Pure saddle when one exists, otherwise SolveMixed.
GameSolution Solve(const PayoffMatrix& m, const SolverOptions& options = {});

double ExpectedValue(const PayoffMatrix& m, const MixedStrategy& x,
                     const MixedStrategy& y);

BestResponseGap ComputeBestResponseGap(const PayoffMatrix& m,
                                       const MixedStrategy& x,
                                       const MixedStrategy& y);

// Text form: first line "rows cols", then one line of entries per row.
PayoffMatrix ReadMatrix(std::istream& in);

std::string FormatSolution(const GameSolution& solution);

}  // namespace gut::matgame

#endif  // GUT_MATGAME_H_

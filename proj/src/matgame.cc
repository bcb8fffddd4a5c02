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

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "gut/error.h"
#include "simplex.h"

namespace gut::matgame {
namespace {

constexpr double kSumTol = 1e-9;

// Drops round-off negatives and renormalizes.
std::vector<double> CleanDistribution(std::vector<double> p) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& v : p) v /= sum;
  return p;
}

void CheckDims(const PayoffMatrix& m, const MixedStrategy& x,
               const MixedStrategy& y) {
  if (x.size() != m.rows() || y.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("matrix is {}x{}, strategies have {} and {}",
                            m.rows(), m.cols(), x.size(), y.size()));
  }
}

std::string FormatVector(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += fmt::format("{:.9f}", v[i]);
  }
  return out;
}

}  // namespace

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "payoff matrix must be non-empty");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("{}x{} matrix given {} entries", rows_, cols_,
                            entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite payoff entry");
    }
  }
}

PayoffMatrix::PayoffMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : PayoffMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(),
                   [&] {
                     std::vector<double> flat;
                     for (const auto& r : rows) {
                       if (r.size() != rows.begin()->size()) {
                         throw Error(ErrorCode::kDimensionMismatch,
                                     "ragged payoff rows");
                       }
                       flat.insert(flat.end(), r.begin(), r.end());
                     }
                     return flat;
                   }()) {}

PayoffMatrix PayoffMatrix::Filled(std::size_t rows, std::size_t cols,
                                  double value) {
  return PayoffMatrix(rows, cols, std::vector<double>(rows * cols, value));
}

double PayoffMatrix::MinEntry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

double PayoffMatrix::MaxEntry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

PayoffMatrix PayoffMatrix::Affine(double alpha, double beta) const {
  std::vector<double> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [&](double v) { return alpha * v + beta; });
  return PayoffMatrix(rows_, cols_, std::move(out));
}

MixedStrategy::MixedStrategy(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty mixed strategy");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("negative probability {}", v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("probabilities sum to {}", sum));
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t size, std::size_t index) {
  std::vector<double> p(size, 0.0);
  p.at(index) = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::Uniform(std::size_t size) {
  return MixedStrategy(
      std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

std::size_t MixedStrategy::ArgMax(double tie_tol) const {
  const double best = *std::max_element(p_.begin(), p_.end());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] >= best - tie_tol) return i;
  }
  return 0;
}

bool MixedStrategy::IsPure() const {
  return std::count(p_.begin(), p_.end(), 1.0) == 1;
}

std::optional<SaddlePoint> FindPureSaddle(const PayoffMatrix& m) {
  std::vector<double> row_min(m.rows(), std::numeric_limits<double>::max());
  std::vector<double> col_max(m.cols(), std::numeric_limits<double>::lowest());
  for (std::size_t g = 0; g < m.rows(); ++g) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row_min[g] = std::min(row_min[g], m(g, k));
      col_max[k] = std::max(col_max[k], m(g, k));
    }
  }
  const double maximin = *std::max_element(row_min.begin(), row_min.end());
  const double minimax = *std::min_element(col_max.begin(), col_max.end());
  if (maximin != minimax) return std::nullopt;
  for (std::size_t g = 0; g < m.rows(); ++g) {
    if (row_min[g] != maximin) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (col_max[k] == minimax && m(g, k) == maximin) {
        return SaddlePoint{g, k, m(g, k)};
      }
    }
  }
  return std::nullopt;
}

GameSolution SolveMixed(const PayoffMatrix& m, const SolverOptions& options) {
  if (!(options.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  const double lo = m.MinEntry();
  const double range = m.MaxEntry() - lo;
  if (range == 0.0) {
    // Every profile is an equilibrium.
    GameSolution s{SolutionKind::kMixed, MixedStrategy::Pure(m.rows(), 0),
                   MixedStrategy::Pure(m.cols(), 0), lo, 0.0};
    return s;
  }

  // Rescale into [1, 2] so the game value is positive, then solve the
  // column player's program: max sum(y') s.t. B y' <= 1, y' >= 0. The
  // optimum is 1/v(B); the duals give the row player's strategy.
  std::vector<double> scaled(m.rows() * m.cols());
  for (std::size_t g = 0; g < m.rows(); ++g) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      scaled[g * m.cols() + k] = (m(g, k) - lo) / range + 1.0;
    }
  }
  const std::vector<double> ones_b(m.rows(), 1.0);
  const std::vector<double> ones_c(m.cols(), 1.0);
  auto lp = internal::MaximizeStandardForm(scaled, ones_b, ones_c,
                                           options.max_pivots);
  if (!lp || !(lp->objective > 0.0)) {
    throw Error(ErrorCode::kNonConvergence,
                fmt::format("simplex did not finish on a {}x{} game",
                            m.rows(), m.cols()));
  }

  MixedStrategy x(CleanDistribution(std::move(lp->dual)));
  MixedStrategy y(CleanDistribution(std::move(lp->primal)));
  const BestResponseGap gap = ComputeBestResponseGap(m, x, y);
  GameSolution s{SolutionKind::kMixed, std::move(x), std::move(y), 0.0,
                 std::max(0.0, gap.Max())};
  s.value = ExpectedValue(m, s.row_strategy, s.col_strategy);
  if (s.epsilon > options.epsilon) {
    throw Error(ErrorCode::kNonConvergence,
                fmt::format("best-response gap {} exceeds epsilon {}",
                            s.epsilon, options.epsilon));
  }
  return s;
}

GameSolution Solve(const PayoffMatrix& m, const SolverOptions& options) {
  if (!(options.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (auto saddle = FindPureSaddle(m)) {
    return GameSolution{SolutionKind::kPure,
                        MixedStrategy::Pure(m.rows(), saddle->row),
                        MixedStrategy::Pure(m.cols(), saddle->col),
                        saddle->value, 0.0};
  }
  return SolveMixed(m, options);
}

double ExpectedValue(const PayoffMatrix& m, const MixedStrategy& x,
                     const MixedStrategy& y) {
  CheckDims(m, x, y);
  double total = 0.0;
  for (std::size_t g = 0; g < m.rows(); ++g) {
    if (x[g] == 0.0) continue;
    double row = 0.0;
    for (std::size_t k = 0; k < m.cols(); ++k) row += m(g, k) * y[k];
    total += x[g] * row;
  }
  return total;
}

BestResponseGap ComputeBestResponseGap(const PayoffMatrix& m,
                                       const MixedStrategy& x,
                                       const MixedStrategy& y) {
  CheckDims(m, x, y);
  const double v = ExpectedValue(m, x, y);
  double best_row = std::numeric_limits<double>::lowest();
  for (std::size_t g = 0; g < m.rows(); ++g) {
    double u = 0.0;
    for (std::size_t k = 0; k < m.cols(); ++k) u += m(g, k) * y[k];
    best_row = std::max(best_row, u);
  }
  double best_col = std::numeric_limits<double>::max();
  for (std::size_t k = 0; k < m.cols(); ++k) {
    double u = 0.0;
    for (std::size_t g = 0; g < m.rows(); ++g) u += m(g, k) * x[g];
    best_col = std::min(best_col, u);
  }
  return BestResponseGap{best_row - v, v - best_col};
}

PayoffMatrix ReadMatrix(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols) || rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected a header line \"rows cols\" with positive sizes");
  }
  std::vector<double> entries(rows * cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(in >> entries[i])) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("expected {} entries, read {}", entries.size(),
                              i));
    }
  }
  return PayoffMatrix(rows, cols, std::move(entries));
}

std::string FormatSolution(const GameSolution& s) {
  return fmt::format(
      "kind = {}\nrow_strategy = {}\ncol_strategy = {}\nvalue = {:.9f}\n"
      "epsilon = {:.3e}\n",
      s.kind == SolutionKind::kPure ? "pure" : "mixed",
      FormatVector(s.row_strategy.probabilities()),
      FormatVector(s.col_strategy.probabilities()), s.value, s.epsilon);
}

}  // namespace gut::matgame

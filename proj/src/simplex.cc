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

#include "simplex.h"

#include <limits>

namespace gut::internal {
namespace {

constexpr double kPivotTol = 1e-12;

}  // namespace

std::optional<LpResult> MaximizeStandardForm(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             std::size_t max_pivots) {
  const std::size_t rows = b.size();
  const std::size_t vars = c.size();
  const std::size_t width = vars + rows + 1;  // structural, slack, rhs
  const std::size_t rhs = width - 1;

  // Row `rows` is the objective row holding reduced costs.
  std::vector<double> t((rows + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& {
    return t[r * width + col];
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) at(r, j) = a[r * vars + j];
    at(r, vars + r) = 1.0;
    at(r, rhs) = b[r];
  }
  for (std::size_t j = 0; j < vars; ++j) at(rows, j) = -c[j];

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots >= max_pivots) return std::nullopt;

    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (at(rows, j) < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotTol) continue;
      const double ratio = at(r, rhs) / coef;
      const bool better = leave == rows || ratio < best_ratio - kPivotTol;
      const bool tie_wins = !better && ratio <= best_ratio + kPivotTol &&
                            basis[r] < basis[leave];
      if (better || tie_wins) {
        leave = r;
        if (better) best_ratio = ratio;
      }
    }
    if (leave == rows) return std::nullopt;  // unbounded

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        at(r, j) -= factor * at(leave, j);
      }
    }
    basis[leave] = enter;
  }

  LpResult result;
  result.primal.assign(vars, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) result.primal[basis[r]] = at(r, rhs);
  }
  result.dual.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) result.dual[r] = at(rows, vars + r);
  result.objective = at(rows, rhs);
  return result;
}

}  // namespace gut::internal

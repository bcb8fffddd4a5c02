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

#ifndef GUT_SRC_SIMPLEX_H_
#define GUT_SRC_SIMPLEX_H_

#include <cstddef>
#include <optional>
#include <vector>

namespace gut::internal {

struct LpResult {
  std::vector<double> primal;  // y
  std::vector<double> dual;    // one shadow price per constraint
  double objective = 0.0;
};

// Dense tableau simplex for
//
//   maximize c'y  subject to  A y <= b,  y >= 0,
//
// with b >= 0 so the slack basis is feasible from the start. Bland's rule
// keeps it from cycling on degenerate games. `a` is row-major with
// b.size() rows and c.size() columns. Returns nullopt when the pivot budget
// runs out or the problem is unbounded.
std::optional<LpResult> MaximizeStandardForm(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             std::size_t max_pivots);

}  // namespace gut::internal

#endif  // GUT_SRC_SIMPLEX_H_

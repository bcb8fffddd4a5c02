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

#ifndef GUT_NEEDS_H_
#define GUT_NEEDS_H_

#include <array>
#include <span>
#include <string_view>
#include <vector>

// Agent needs hierarchy: five prioritized levels, each an expectation of
// feature utilities under feature probabilities.

namespace gut::needs {

enum class Level { kSafety = 0, kBasic, kCapability, kTeaming, kLearning };
inline constexpr std::size_t kNumLevels = 5;

std::string_view LevelName(Level level);

// Feature utilities and probabilities for one level. The probabilities are
// expected to be conditioned on the lower levels already; this module does
// not model the conditioning.
struct LevelFeatures {
  Level level = Level::kSafety;
  std::vector<double> values;
  std::vector<double> probabilities;
};

struct NeedsProfile {
  double safety = 0.0;
  double basic = 0.0;
  double capability = 0.0;
  double teaming = 0.0;
  double learning = 0.0;

  // Unweighted sum of the five levels.
  double Total() const { return safety + basic + capability + teaming + learning; }
  double& operator[](Level level);
  double operator[](Level level) const;

  bool operator==(const NeedsProfile&) const = default;
};

enum class Relation { kAdversary, kFriendly, kNeutral };

std::string_view RelationName(Relation relation);

inline constexpr double kDefaultNeutralTolerance = 1e-9;

// sum_i values_i * probabilities_i. Throws kLengthMismatch on unequal
// lengths and kInvalidArgument on probabilities outside [0, 1].
double LevelNeed(const LevelFeatures& features);

// Levels must arrive ordered safety -> learning.
NeedsProfile Profile(std::span<const LevelFeatures, kNumLevels> levels);

// Component-wise sum. Throws kEmptyTeam on an empty list.
NeedsProfile TeamNeed(std::span<const NeedsProfile> profiles);

// Adversary if the other agent's presence raises the total need by more
// than `tol`, friendly if it lowers it by more than `tol`, else neutral.
Relation ClassifyRelation(double needs_without, double needs_with,
                          double tol = kDefaultNeutralTolerance);

}  // namespace gut::needs

#endif  // GUT_NEEDS_H_

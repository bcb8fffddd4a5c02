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

#include "gut/needs.h"

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::needs {

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kSafety: return "safety";
    case Level::kBasic: return "basic";
    case Level::kCapability: return "capability";
    case Level::kTeaming: return "teaming";
    case Level::kLearning: return "learning";
  }
  return "unknown";
}

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kAdversary: return "adversary";
    case Relation::kFriendly: return "friendly";
    case Relation::kNeutral: return "neutral";
  }
  return "unknown";
}

double& NeedsProfile::operator[](Level level) {
  switch (level) {
    case Level::kSafety: return safety;
    case Level::kBasic: return basic;
    case Level::kCapability: return capability;
    case Level::kTeaming: return teaming;
    case Level::kLearning: return learning;
  }
  return safety;
}

double NeedsProfile::operator[](Level level) const {
  return const_cast<NeedsProfile&>(*this)[level];
}

double LevelNeed(const LevelFeatures& f) {
  if (f.values.size() != f.probabilities.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("{} level has {} values and {} probabilities",
                            LevelName(f.level), f.values.size(),
                            f.probabilities.size()));
  }
  double need = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double p = f.probabilities[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("probability {} outside [0, 1]", p));
    }
    need += f.values[i] * p;
  }
  return need;
}

NeedsProfile Profile(std::span<const LevelFeatures, kNumLevels> levels) {
  NeedsProfile out;
  for (std::size_t i = 0; i < kNumLevels; ++i) {
    const Level expected = static_cast<Level>(i);
    if (levels[i].level != expected) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("level {} found where {} was expected",
                              LevelName(levels[i].level), LevelName(expected)));
    }
    out[expected] = LevelNeed(levels[i]);
  }
  return out;
}

NeedsProfile TeamNeed(std::span<const NeedsProfile> profiles) {
  if (profiles.empty()) {
    throw Error(ErrorCode::kEmptyTeam, "team need of an empty team");
  }
  NeedsProfile sum;
  for (const NeedsProfile& p : profiles) {
    sum.safety += p.safety;
    sum.basic += p.basic;
    sum.capability += p.capability;
    sum.teaming += p.teaming;
    sum.learning += p.learning;
  }
  return sum;
}

Relation ClassifyRelation(double needs_without, double needs_with, double tol) {
  const double d = needs_with - needs_without;
  if (d > tol) return Relation::kAdversary;
  if (d < -tol) return Relation::kFriendly;
  return Relation::kNeutral;
}

}  // namespace gut::needs

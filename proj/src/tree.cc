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

#include <fmt/format.h>

namespace gut::tree {

std::vector<LevelChoice> StrategySeries::Choices() const {
  std::vector<LevelChoice> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.choice);
  return out;
}

bool StrategySeries::operator==(const StrategySeries& other) const {
  if (levels.size() != other.levels.size() ||
      joint_probability != other.joint_probability) {
    return false;
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& a = levels[i];
    const auto& b = other.levels[i];
    if (a.choice != b.choice || a.probability != b.probability ||
        a.solution.value != b.solution.value) {
      return false;
    }
    const auto ar = a.solution.row_strategy.probabilities();
    const auto br = b.solution.row_strategy.probabilities();
    const auto ac = a.solution.col_strategy.probabilities();
    const auto bc = b.solution.col_strategy.probabilities();
    if (!std::equal(ar.begin(), ar.end(), br.begin(), br.end()) ||
        !std::equal(ac.begin(), ac.end(), bc.begin(), bc.end())) {
      return false;
    }
  }
  return true;
}

double JointProbability(const StrategySeries& series) {
  double p = 1.0;
  for (const auto& level : series.levels) p *= level.probability;
  return p;
}

std::string FormatSeries(const StrategySeries& series) {
  std::string out;
  for (std::size_t i = 0; i < series.levels.size(); ++i) {
    const auto& l = series.levels[i];
    out += fmt::format("level {}: {} vs {} (p = {:.6f}, value = {:.6f})\n",
                       i + 1, l.row_label, l.col_label, l.probability,
                       l.solution.value);
  }
  out += fmt::format("joint probability = {:.6f}\n", series.joint_probability);
  return out;
}

namespace internal {

std::size_t SelectIndex(const matgame::MixedStrategy& s, Selection selection,
                        std::mt19937_64* rng) {
  if (selection == Selection::kMaxProbability) return s.ArgMax();
  auto p = s.probabilities();
  std::discrete_distribution<std::size_t> pick(p.begin(), p.end());
  return pick(*rng);
}

std::chrono::nanoseconds Median(std::vector<std::chrono::nanoseconds> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace internal
}  // namespace gut::tree

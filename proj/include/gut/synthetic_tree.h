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

#ifndef GUT_SYNTHETIC_TREE_H_
#define GUT_SYNTHETIC_TREE_H_

#include <cstdint>
#include <vector>

#include "gut/tree.h"

namespace gut::tree {

// Synthetic trees carry no situation; payoffs are a deterministic function
// of (seed, level, upstream path).
struct SyntheticContext {};

struct SyntheticTreeOptions {
  std::uint64_t seed = 0;
  // Per level: (rows, cols).
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  double low = -10.0;
  double high = 10.0;
  // When false every level's matrix ignores the upstream choices.
  bool depends_on_upstream = true;
};

GutTree<SyntheticContext> MakeSyntheticTree(const SyntheticTreeOptions& options);

// w levels of size x size.
GutTree<SyntheticContext> MakeUniformSyntheticTree(std::uint64_t seed,
                                                   std::size_t depth,
                                                   std::size_t size);

}  // namespace gut::tree

#endif  // GUT_SYNTHETIC_TREE_H_

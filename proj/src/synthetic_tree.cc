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

#include "gut/synthetic_tree.h"

#include <random>
#include <string>

namespace gut::tree {
namespace {

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

GutTree<SyntheticContext> MakeSyntheticTree(
    const SyntheticTreeOptions& options) {
  std::vector<LevelSpec<SyntheticContext>> levels;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    const auto [rows, cols] = options.sizes[i];
    LevelSpec<SyntheticContext> spec;
    for (std::size_t g = 0; g < rows; ++g) {
      spec.row_labels.push_back("L" + std::to_string(i + 1) + "r" +
                                std::to_string(g));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      spec.col_labels.push_back("L" + std::to_string(i + 1) + "c" +
                                std::to_string(k));
    }
    spec.build = [options, i, rows, cols](
                     const SyntheticContext&,
                     std::span<const LevelChoice> upstream) {
      std::uint64_t h = Mix(options.seed ^ Mix(i + 1));
      if (options.depends_on_upstream) {
        for (const LevelChoice& c : upstream) {
          h = Mix(h ^ (c.row * 1000003ULL + c.col));
        }
      }
      std::mt19937_64 rng(h);
      std::uniform_real_distribution<double> u(options.low, options.high);
      std::vector<double> e(rows * cols);
      for (double& v : e) v = u(rng);
      return matgame::PayoffMatrix(rows, cols, std::move(e));
    };
    levels.push_back(std::move(spec));
  }
  return GutTree<SyntheticContext>(std::move(levels));
}

GutTree<SyntheticContext> MakeUniformSyntheticTree(std::uint64_t seed,
                                                   std::size_t depth,
                                                   std::size_t size) {
  SyntheticTreeOptions options;
  options.seed = seed;
  options.sizes.assign(depth, {size, size});
  return MakeSyntheticTree(options);
}

}  // namespace gut::tree

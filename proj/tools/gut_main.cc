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

// Command line front end: solve, gut-bench, run, batch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "gut/error.h"
#include "gut/harness/harness.h"
#include "gut/matgame.h"
#include "gut/synthetic_tree.h"
#include "gut/tree.h"

namespace {

int Solve(const std::string& path, double epsilon) {
  gut::matgame::PayoffMatrix matrix = [&] {
    if (path.empty() || path == "-") return gut::matgame::ReadMatrix(std::cin);
    std::ifstream in(path);
    if (!in) {
      throw gut::Error(gut::ErrorCode::kInvalidArgument,
                       fmt::format("cannot open '{}'", path));
    }
    return gut::matgame::ReadMatrix(in);
  }();
  gut::matgame::SolverOptions options;
  options.epsilon = epsilon;
  std::cout << gut::matgame::FormatSolution(gut::matgame::Solve(matrix, options));
  return 0;
}

int Bench(const std::vector<std::size_t>& depths,
          const std::vector<std::size_t>& sizes, int instances, int repeats,
          std::uint64_t seed) {
  using Ns = std::chrono::nanoseconds;
  std::cout << "w,size,flat_rows,instances,median_gut_ns,median_flat_ns,ratio\n";
  for (std::size_t w : depths) {
    for (std::size_t size : sizes) {
      std::size_t flat_rows = 1;
      for (std::size_t i = 0; i < w; ++i) flat_rows *= size;
      std::vector<Ns> gut_times;
      std::vector<Ns> flat_times;
      bool capped = false;
      for (int k = 0; k < instances && !capped; ++k) {
        const auto tree = gut::tree::MakeUniformSyntheticTree(
            seed + static_cast<std::uint64_t>(k), w, size);
        try {
          const auto t = gut::tree::TimeCompare(tree, gut::tree::SyntheticContext{},
                                                static_cast<std::size_t>(repeats));
          gut_times.push_back(t.gut);
          flat_times.push_back(t.flat);
        } catch (const gut::Error& e) {
          if (e.code() != gut::ErrorCode::kCapExceeded) throw;
          capped = true;
        }
      }
      if (capped) {
        std::cout << fmt::format("{},{},{},{},,,\n", w, size, flat_rows, instances);
        continue;
      }
      const Ns g = gut::tree::internal::Median(gut_times);
      const Ns f = gut::tree::internal::Median(flat_times);
      std::cout << fmt::format("{},{},{},{},{},{},{:.4f}\n", w, size, flat_rows,
                               instances, g.count(), f.count(),
                               f.count() > 0 ? static_cast<double>(g.count()) /
                                                   static_cast<double>(f.count())
                                             : 0.0);
    }
  }
  return 0;
}

void Emit(const std::vector<gut::harness::BatchSummary>& summaries,
          const std::string& out_path, bool table) {
  const std::string csv =
      gut::harness::Report(summaries, gut::harness::ReportFormat::kCsv);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw gut::Error(gut::ErrorCode::kInvalidArgument,
                       fmt::format("cannot write '{}'", out_path));
    }
    out << csv;
  }
  if (table) {
    std::cout << gut::harness::Report(summaries, gut::harness::ReportFormat::kTable);
  } else if (out_path.empty()) {
    std::cout << csv;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic utility tree tools"};
  app.require_subcommand(1);

  std::string matrix_path;
  double epsilon = gut::matgame::kDefaultEpsilon;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve a zero-sum matrix game read as 'l m' then l rows of m entries");
  solve->add_option("file", matrix_path, "Matrix file, '-' or omitted for stdin");
  solve->add_option("--epsilon", epsilon, "Best-response gap tolerance");

  std::vector<std::size_t> depths{1, 2, 3};
  std::vector<std::size_t> sizes{2, 3, 4};
  int instances = 100;
  int repeats = 5;
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand(
      "gut-bench", "Median descend vs flat solve times over a (w, size) grid");
  bench->add_option("--depths", depths, "Tree depths w")->delimiter(',');
  bench->add_option("--sizes", sizes, "Square level sizes")->delimiter(',');
  bench->add_option("--instances", instances, "Random trees per grid cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeats", repeats, "Timing repeats per tree")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "First tree seed");

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  int trials = 0;
  bool table = false;
  CLI::App* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("--config", config_path, "Scenario file")->required();
  CLI::Option* run_seed = run->add_option("--seed", seed, "Override the seed");
  run->add_option("--trials", trials, "Override the trial count")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Write CSV here");
  run->add_flag("--table", table, "Print a fixed-width table");

  std::string suite;
  std::uint64_t batch_seed = 0;
  CLI::App* batch = app.add_subcommand("batch", "Run a bundled scenario suite");
  batch->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"paper-table4", "paper-table5", "paper-table8"}));
  batch->add_option("--seed", batch_seed, "Base seed");
  batch->add_option("--out", out_path, "Write CSV here");
  batch->add_flag("--table", table, "Print a fixed-width table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return Solve(matrix_path, epsilon);
    if (*bench) return Bench(depths, sizes, instances, repeats, bench_seed);
    if (*run) {
      gut::harness::ScenarioConfig cfg = gut::harness::LoadScenario(config_path);
      if (*run_seed) cfg.seed = seed;
      if (trials > 0) cfg.trials = trials;
      Emit({gut::harness::RunBatch(cfg)}, out_path, table);
      return 0;
    }
    std::vector<gut::harness::BatchSummary> summaries;
    for (const auto& cfg : gut::harness::Suite(suite, batch_seed)) {
      summaries.push_back(gut::harness::RunBatch(cfg));
    }
    Emit(summaries, out_path, table);
    return 0;
  } catch (const gut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

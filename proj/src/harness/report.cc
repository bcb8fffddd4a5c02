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

#include <fmt/format.h>

#include "gut/error.h"
#include "gut/harness/harness.h"

namespace gut::harness {
namespace {

std::string Cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.4f}", *v) : std::string();
}

std::string Cell(double v) { return fmt::format("{:.4f}", v); }

}  // namespace

std::string Report(std::span<const BatchSummary> summaries, ReportFormat format) {
  if (summaries.empty()) {
    throw Error(ErrorCode::kEmptyInput, "nothing to report");
  }
  std::string out;
  if (format == ReportFormat::kCsv) {
    out += "scenario,explorers,aliens,policy,info,trials,wins,draws,win_rate,"
           "c_se_per_win,c_shp_per_win,explorers_lost_per_win,"
           "explorers_lost_per_round,lost_per_kill,hp_cost_per_kill\n";
    for (const BatchSummary& s : summaries) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                         s.scenario, s.explorers, s.aliens, s.policy, s.info,
                         s.trials, s.wins, s.draws, Cell(s.win_rate),
                         Cell(s.c_se_per_win), Cell(s.c_shp_per_win),
                         Cell(s.explorers_lost_per_win),
                         Cell(s.explorers_lost_per_round), Cell(s.lost_per_kill),
                         Cell(s.hp_cost_per_kill));
    }
    return out;
  }
  auto dash = [](const std::optional<double>& v, int decimals) {
    return v ? fmt::format("{:.{}f}", *v, decimals) : std::string("-");
  };
  out += fmt::format("{:<22} {:>7} {:<17} {:<9} {:>6} {:>10} {:>10} {:>9} {:>9}\n",
                     "scenario", "e:a", "policy", "info", "WR", "C_se/w",
                     "C_shp/w", "lost/win", "lost/rnd");
  for (const BatchSummary& s : summaries) {
    out += fmt::format(
        "{:<22} {:>7} {:<17} {:<9} {:>5.0f}% {:>10} {:>10} {:>9} {:>9.2f}\n",
        s.scenario, fmt::format("{}:{}", s.explorers, s.aliens), s.policy,
        s.info, 100.0 * s.win_rate, dash(s.c_se_per_win, 2),
        dash(s.c_shp_per_win, 2), dash(s.explorers_lost_per_win, 2),
        s.explorers_lost_per_round);
  }
  return out;
}

}  // namespace gut::harness

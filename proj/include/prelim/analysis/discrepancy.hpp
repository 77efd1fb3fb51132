//------------------------------------------------------------------------------
//
//   Copyright 2026 The prelimsim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include "prelim/analysis/records.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace prelim::analysis {

/// Label of federal-level rows in result files.
inline constexpr char kFederalLabel[] = "CH";

/// |yes_prelim - yes_final| + |no_prelim - no_final|.
std::uint64_t discrepancy(HistoricalRecord const &record);

struct DiscrepancyStat
{
  std::string   canton;
  std::uint64_t max_abs_discrepancy = 0;
  std::uint64_t total_at_max        = 0;  // final total of the referendum holding the max
  double        max_relative        = 0.0;
  std::string   referendum_at_max;
};

struct DiscrepancyReport
{
  /// One entry per canton in order of first appearance; excludes federal rows.
  std::vector<DiscrepancyStat> cantons;
  /// Federal-level statistic: from federal rows where present, otherwise from
  /// the sums over the cantons of each referendum.
  DiscrepancyStat federal;
  /// Mean relative federal discrepancy over referendums.
  double federal_average = 0.0;
  /// Mean over referendums of the largest relative cantonal discrepancy.
  double average_max_cantonal = 0.0;
  std::size_t referendums = 0;
};

/// Throws std::invalid_argument on empty input.
DiscrepancyReport discrepancy_stats(std::span<HistoricalRecord const> records);

/// Percent with two decimals, e.g. "2.24%".
std::string format_percent(double fraction);

/// Human-readable table.
void write_report(std::ostream &os, DiscrepancyReport const &report);

/// Machine-readable summary: "canton,votes,total,percent" rows, federal last.
void write_summary_csv(std::ostream &os, DiscrepancyReport const &report);

}  // namespace prelim::analysis

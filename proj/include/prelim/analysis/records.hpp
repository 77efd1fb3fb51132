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

#include "prelim/core/vote_count.hpp"

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace prelim::analysis {

/// Preliminary and final counts of one canton in one referendum.
struct HistoricalRecord
{
  std::string                 referendum_id;
  std::chrono::year_month_day date;
  std::string                 canton;
  core::VoteCount             preliminary;  // yes/no only
  core::VoteCount             final;        // blank carries final_total - yes - no
};

/// Reads the comma-separated results format with header
///
///   referendum_id,date,canton,prelim_yes,prelim_no,final_yes,final_no,final_total
///
/// Dates are ISO-8601. Throws ParseError (with the 1-based row number) on
/// malformed rows and DuplicateRecord when a canton repeats in a referendum.
std::vector<HistoricalRecord> load_results(std::istream &in);
std::vector<HistoricalRecord> load_results_file(std::filesystem::path const &path);

}  // namespace prelim::analysis

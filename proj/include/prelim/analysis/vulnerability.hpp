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

#include "prelim/analysis/discrepancy.hpp"
#include "prelim/core/flips.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prelim::analysis {

struct VulnerabilityAssessment
{
  std::string         referendum_id;
  core::ReferendumSpec spec;
  core::Outcome       outcome;

  core::FlipPlan popular_plan;
  /// Largest historical discrepancy over all cantons: any one of them could
  /// hide the popular flip inside its usual counting noise.
  std::uint64_t popular_threshold  = 0;
  bool          popular_vulnerable = false;

  std::optional<core::FlipPlan> cantonal_plan;
  /// Largest historical discrepancy among the cantons the plan touches.
  std::uint64_t cantonal_threshold  = 0;
  bool          cantonal_vulnerable = false;
};

/// Final counts of one referendum keyed by canton id. Federal rows are skipped.
/// Throws MissingCanton when a canton of the tree has no record and
/// UnknownCanton for a label the tree does not know.
core::CantonCounts final_counts(std::span<HistoricalRecord const> records,
                                std::string const &referendum_id,
                                core::JurisdictionTree const &tree);

/// For each referendum in `specs` (in order), the min-flip plans reversing
/// the current popular and, under double majority, cantonal outcome; flagged
/// vulnerable when the flips fit within historical discrepancies.
std::vector<VulnerabilityAssessment>
vulnerability_report(std::span<HistoricalRecord const> records,
                     std::span<DiscrepancyStat const> history, core::JurisdictionTree const &tree,
                     std::vector<core::ReferendumSpec> const &specs);

void write_assessments(std::ostream &os, std::vector<VulnerabilityAssessment> const &assessments,
                       core::JurisdictionTree const &tree);

}  // namespace prelim::analysis

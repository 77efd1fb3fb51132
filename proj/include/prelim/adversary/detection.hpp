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

#include "prelim/simnet/trace.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace prelim::adversary {

/// A preliminary publication whose totals differ from the ground truth of the
/// leaves it covers, i.e. counts were altered somewhere on the way up.
struct Divergence
{
  simnet::Tick    time = 0;
  core::VoteCount published;
  core::VoteCount expected;
};

/// A preliminary publication that does not yet reflect every leaf.
struct CoverageGap
{
  simnet::Tick                      time           = 0;
  std::size_t                       leaves_covered = 0;
  std::size_t                       leaves_total   = 0;
  std::vector<core::JurisdictionId> missing_children;
};

struct DetectionSummary
{
  std::vector<Divergence>           divergences;
  std::vector<CoverageGap>          coverage_gaps;
  std::vector<simnet::DetectRecord> detections;
  std::optional<core::VoteCount>    final_totals;
  std::optional<simnet::Tick>       final_publication;
  std::optional<simnet::Tick>       first_divergence;
  /// Ticks from the first divergent publication to the Final publication.
  simnet::Tick integrity_gap = 0;
  /// Complete-coverage preliminary publications whose popular outcome differs
  /// from the Final one.
  std::size_t outcome_reversals          = 0;
  bool        final_matches_ground_truth = false;
};

DetectionSummary detection_report(simnet::EventTrace const &trace,
                                  core::VoteCount const    &ground_truth);

/// Structured text form, one "key=value" record per line.
void write_summary(std::ostream &os, DetectionSummary const &summary);

}  // namespace prelim::adversary

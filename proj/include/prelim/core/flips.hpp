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

#include "prelim/core/outcome.hpp"

#include <cstdint>
#include <map>

namespace prelim::core {

/// Result of a minimum-flip search. One flip moves a single ballot from the
/// side opposing `achieves` to the side of `achieves`.
struct FlipPlan
{
  std::map<JurisdictionId, std::uint64_t> flips_per_canton;
  std::uint64_t                           total_flips = 0;
  Decision                                achieves    = Decision::Rejected;
};

/// Smallest number of flips after which popular_outcome(counts) == target.
/// Zero when the target already holds. Throws Infeasible when the opposing
/// side does not hold enough ballots.
std::uint64_t flips_needed(VoteCount const &counts, Decision target);

/// Moves `flips` ballots toward `target`. Throws Infeasible if the opposing
/// side holds fewer ballots.
VoteCount apply_flips(VoteCount const &counts, std::uint64_t flips, Decision target);

FlipPlan min_flips_popular(VoteCount const &counts, Decision target);

/// Exact minimum-cost selection of cantons to flip, solved as a 0/1 knapsack
/// over half-vote units.
FlipPlan min_flips_cantonal(CantonCounts const &per_canton, JurisdictionTree const &tree,
                            Decision target);

/// Minimum flips after which popular and cantonal majority both equal
/// `target`. Requires spec.majority_rule == DoubleMajority.
FlipPlan min_flips_double(CantonCounts const &per_canton, JurisdictionTree const &tree,
                          ReferendumSpec const &spec, Decision target);

CantonCounts apply_plan(CantonCounts const &per_canton, FlipPlan const &plan);

}  // namespace prelim::core

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

#include "prelim/core/jurisdiction.hpp"
#include "prelim/core/vote_count.hpp"

#include <map>
#include <optional>
#include <string>

namespace prelim::core {

enum class MajorityRule
{
  PopularOnly,     // law referendums
  DoubleMajority,  // constitutional changes: people and cantons
};

char const *to_string(MajorityRule r) noexcept;

struct ReferendumSpec
{
  std::string  election_id;
  MajorityRule majority_rule = MajorityRule::PopularOnly;
};

using CantonCounts = std::map<JurisdictionId, VoteCount>;

struct CantonalTally
{
  Decision decision    = Decision::Rejected;
  int      yes_halves  = 0;
  int      no_halves   = 0;
  int      total_halves = 0;
};

struct Outcome
{
  Decision                popular = Decision::Rejected;
  std::optional<Decision> cantonal;
  Decision                overall    = Decision::Rejected;
  int                     yes_halves = 0;
  int                     no_halves  = 0;
};

/// Strict majority of yes over no; ties and empty counts reject.
Decision popular_outcome(VoteCount const &counts) noexcept;

/// Each canton adds its weight to the side holding its strict popular
/// majority; a canton-level tie adds to neither. Accepted iff the yes weight
/// exceeds half of the total weight.
///
/// Throws MissingCanton when a weighted canton has no count and UnknownCanton
/// when a count is given for a node that carries no weight.
CantonalTally cantonal_outcome(CantonCounts const &per_canton, JurisdictionTree const &tree);

Outcome referendum_outcome(ReferendumSpec const &spec, CantonCounts const &per_canton,
                           JurisdictionTree const &tree);

}  // namespace prelim::core

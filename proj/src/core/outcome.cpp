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

#include "prelim/core/outcome.hpp"

#include "prelim/core/errors.hpp"

#include <vector>

namespace prelim::core {

char const *to_string(MajorityRule r) noexcept
{
  return r == MajorityRule::PopularOnly ? "PopularOnly" : "DoubleMajority";
}

Decision popular_outcome(VoteCount const &counts) noexcept
{
  return counts.yes > counts.no ? Decision::Accepted : Decision::Rejected;
}

CantonalTally cantonal_outcome(CantonCounts const &per_canton, JurisdictionTree const &tree)
{
  for (auto const &[id, c] : per_canton)
  {
    if (!tree.weight(id))
    {
      throw UnknownCanton{"counts given for a node without cantonal weight: " + id.str()};
    }
  }

  CantonalTally tally;
  for (auto const &canton : tree.cantons())
  {
    auto it = per_canton.find(canton);
    if (it == per_canton.end())
    {
      throw MissingCanton{"no counts for canton " + canton.str()};
    }
    int const w = tree.weight(canton)->halves;
    tally.total_halves += w;
    if (it->second.yes > it->second.no)
    {
      tally.yes_halves += w;
    }
    else if (it->second.no > it->second.yes)
    {
      tally.no_halves += w;
    }
  }
  tally.decision =
      2 * tally.yes_halves > tally.total_halves ? Decision::Accepted : Decision::Rejected;
  return tally;
}

Outcome referendum_outcome(ReferendumSpec const &spec, CantonCounts const &per_canton,
                           JurisdictionTree const &tree)
{
  std::vector<VoteCount> counts;
  counts.reserve(per_canton.size());
  for (auto const &[id, c] : per_canton)
  {
    counts.push_back(c);
  }

  Outcome out;
  out.popular = popular_outcome(accumulate(counts));
  out.overall = out.popular;
  if (spec.majority_rule == MajorityRule::DoubleMajority)
  {
    auto const tally = cantonal_outcome(per_canton, tree);
    out.cantonal     = tally.decision;
    out.yes_halves   = tally.yes_halves;
    out.no_halves    = tally.no_halves;
    out.overall = (out.popular == Decision::Accepted && tally.decision == Decision::Accepted)
                      ? Decision::Accepted
                      : Decision::Rejected;
  }
  return out;
}

}  // namespace prelim::core

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

#include "prelim/core/flips.hpp"

#include "prelim/core/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace prelim::core {
namespace {

constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

std::uint64_t opposing_ballots(VoteCount const &c, Decision target)
{
  return target == Decision::Accepted ? c.no : c.yes;
}

struct Candidate
{
  JurisdictionId id;
  int            halves;
  std::uint64_t  cost;
};

// 0/1 knapsack: cheapest subset whose weight reaches `required` half-votes.
// Weight above `required` is capped, so the table has required + 1 columns.
std::vector<std::size_t> cheapest_cover(std::vector<Candidate> const &items, int required)
{
  auto const n    = items.size();
  auto const cols = static_cast<std::size_t>(required) + 1;
  // best[i][w]: cheapest cost using the first i items reaching capped weight w
  std::vector<std::vector<std::uint64_t>> best(n + 1,
                                               std::vector<std::uint64_t>(cols, kUnreachable));
  best[0][0] = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t w = 0; w < cols; ++w)
    {
      if (best[i][w] == kUnreachable)
      {
        continue;
      }
      best[i + 1][w] = std::min(best[i + 1][w], best[i][w]);
      auto const to =
          std::min<std::size_t>(w + static_cast<std::size_t>(items[i].halves), cols - 1);
      best[i + 1][to] = std::min(best[i + 1][to], best[i][w] + items[i].cost);
    }
  }
  if (best[n][cols - 1] == kUnreachable)
  {
    throw Infeasible{"flipping every opposing canton does not reach the cantonal target"};
  }

  // Walk back, preferring to skip an item whenever skipping keeps the optimum.
  std::vector<std::size_t> chosen;
  std::size_t              w = cols - 1;
  for (std::size_t i = n; i-- > 0;)
  {
    if (best[i][w] == best[i + 1][w])
    {
      continue;
    }
    // Item i was taken: find the predecessor column.
    for (std::size_t from = 0; from < cols; ++from)
    {
      auto const to =
          std::min<std::size_t>(from + static_cast<std::size_t>(items[i].halves), cols - 1);
      if (to == w && best[i][from] != kUnreachable &&
          best[i][from] + items[i].cost == best[i + 1][w])
      {
        chosen.push_back(i);
        w = from;
        break;
      }
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::uint64_t flips_needed(VoteCount const &counts, Decision target)
{
  if (popular_outcome(counts) == target)
  {
    return 0;
  }
  std::uint64_t needed = 0;
  if (target == Decision::Accepted)
  {
    // yes + k > no - k
    needed = (counts.no - counts.yes) / 2 + 1;
  }
  else
  {
    // yes - k <= no + k, ties reject
    auto const margin = counts.yes - counts.no;
    needed            = margin / 2 + margin % 2;
  }
  if (needed > opposing_ballots(counts, target))
  {
    throw Infeasible{"not enough opposing ballots to reach the target"};
  }
  return needed;
}

VoteCount apply_flips(VoteCount const &counts, std::uint64_t flips, Decision target)
{
  if (flips > opposing_ballots(counts, target))
  {
    throw Infeasible{"cannot flip more ballots than the opposing side holds"};
  }
  VoteCount out = counts;
  if (target == Decision::Accepted)
  {
    out.no -= flips;
    out.yes += flips;
  }
  else
  {
    out.yes -= flips;
    out.no += flips;
  }
  return out;
}

FlipPlan min_flips_popular(VoteCount const &counts, Decision target)
{
  FlipPlan plan;
  plan.achieves    = target;
  plan.total_flips = flips_needed(counts, target);
  return plan;
}

FlipPlan min_flips_cantonal(CantonCounts const &per_canton, JurisdictionTree const &tree,
                            Decision target)
{
  auto const tally = cantonal_outcome(per_canton, tree);
  FlipPlan   plan;
  plan.achieves = target;
  if (tally.decision == target)
  {
    return plan;
  }

  int const half_total = tally.total_halves / 2;
  int       required   = 0;
  if (target == Decision::Accepted)
  {
    required = half_total + 1 - tally.yes_halves;
  }
  else
  {
    required = tally.yes_halves - half_total;
  }

  std::vector<Candidate> items;
  for (auto const &canton : tree.cantons())
  {
    auto const &c = per_canton.at(canton);
    if (popular_outcome(c) == target)
    {
      continue;
    }
    try
    {
      items.push_back({canton, tree.weight(canton)->halves, flips_needed(c, target)});
    }
    catch (Infeasible const &)
    {
      // this canton cannot be moved at all
    }
  }

  for (auto const i : cheapest_cover(items, required))
  {
    plan.flips_per_canton[items[i].id] = items[i].cost;
    plan.total_flips += items[i].cost;
  }
  return plan;
}

FlipPlan min_flips_double(CantonCounts const &per_canton, JurisdictionTree const &tree,
                          ReferendumSpec const &spec, Decision target)
{
  if (spec.majority_rule != MajorityRule::DoubleMajority)
  {
    throw std::invalid_argument{"min_flips_double requires a double-majority referendum"};
  }

  std::vector<VoteCount> all;
  for (auto const &[id, c] : per_canton)
  {
    all.push_back(c);
  }
  auto const    national = accumulate(all);
  std::uint64_t popular  = flips_needed(national, target);

  // Flipping toward the target never hurts either majority, so the optimum is
  // the cheapest cantonal cover topped up to the popular requirement.
  FlipPlan plan  = min_flips_cantonal(per_canton, tree, target);
  auto     extra = popular > plan.total_flips ? popular - plan.total_flips : 0;
  for (auto const &canton : tree.cantons())
  {
    if (extra == 0)
    {
      break;
    }
    auto &assigned = plan.flips_per_canton[canton];
    auto  spare    = opposing_ballots(per_canton.at(canton), target) - assigned;
    auto  take     = std::min(spare, extra);
    assigned += take;
    extra -= take;
    if (assigned == 0)
    {
      plan.flips_per_canton.erase(canton);
    }
  }
  plan.total_flips = std::max(plan.total_flips, popular);
  return plan;
}

CantonCounts apply_plan(CantonCounts const &per_canton, FlipPlan const &plan)
{
  CantonCounts out = per_canton;
  for (auto const &[id, flips] : plan.flips_per_canton)
  {
    auto it = out.find(id);
    if (it == out.end())
    {
      throw MissingCanton{"plan refers to a canton without counts: " + id.str()};
    }
    it->second = apply_flips(it->second, flips, plan.achieves);
  }
  return out;
}

}  // namespace prelim::core

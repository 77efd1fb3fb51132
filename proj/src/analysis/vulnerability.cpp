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

#include "prelim/analysis/vulnerability.hpp"

#include "prelim/core/errors.hpp"

#include <algorithm>
#include <ostream>

namespace prelim::analysis {
namespace {

std::uint64_t history_of(std::span<DiscrepancyStat const> history, core::JurisdictionId const &id,
                         core::JurisdictionTree const &tree)
{
  std::uint64_t best = 0;
  for (auto const &s : history)
  {
    if (tree.find_canton(s.canton) == id)
    {
      best = std::max(best, s.max_abs_discrepancy);
    }
  }
  return best;
}

}  // namespace

core::CantonCounts final_counts(std::span<HistoricalRecord const> records,
                                std::string const &referendum_id,
                                core::JurisdictionTree const &tree)
{
  core::CantonCounts out;
  for (auto const &r : records)
  {
    if (r.referendum_id != referendum_id || r.canton == kFederalLabel)
    {
      continue;
    }
    auto id = tree.find_canton(r.canton);
    if (!id)
    {
      throw UnknownCanton{"unknown canton '" + r.canton + "' in " + referendum_id};
    }
    out[*id] = r.final;
  }
  for (auto const &canton : tree.cantons())
  {
    if (!out.contains(canton))
    {
      throw MissingCanton{referendum_id + " has no record for " + tree.display_name(canton)};
    }
  }
  return out;
}

std::vector<VulnerabilityAssessment>
vulnerability_report(std::span<HistoricalRecord const> records,
                     std::span<DiscrepancyStat const> history, core::JurisdictionTree const &tree,
                     std::vector<core::ReferendumSpec> const &specs)
{
  std::uint64_t overall_max = 0;
  for (auto const &s : history)
  {
    if (s.canton != kFederalLabel)
    {
      overall_max = std::max(overall_max, s.max_abs_discrepancy);
    }
  }

  std::vector<VulnerabilityAssessment> out;
  for (auto const &spec : specs)
  {
    VulnerabilityAssessment a;
    a.referendum_id = spec.election_id;
    a.spec          = spec;
    auto const counts = final_counts(records, spec.election_id, tree);
    a.outcome         = core::referendum_outcome(spec, counts, tree);

    std::vector<core::VoteCount> all;
    for (auto const &[id, c] : counts)
    {
      all.push_back(c);
    }
    a.popular_plan       = core::min_flips_popular(core::accumulate(all),
                                                   core::opposite(a.outcome.popular));
    a.popular_threshold  = overall_max;
    a.popular_vulnerable = a.popular_plan.total_flips <= a.popular_threshold;

    if (spec.majority_rule == core::MajorityRule::DoubleMajority)
    {
      try
      {
        a.cantonal_plan =
            core::min_flips_cantonal(counts, tree, core::opposite(*a.outcome.cantonal));
        for (auto const &[id, flips] : a.cantonal_plan->flips_per_canton)
        {
          a.cantonal_threshold = std::max(a.cantonal_threshold, history_of(history, id, tree));
        }
        a.cantonal_vulnerable = a.cantonal_plan->total_flips <= a.cantonal_threshold;
      }
      catch (Infeasible const &)
      {
        a.cantonal_plan.reset();
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

void write_assessments(std::ostream &os, std::vector<VulnerabilityAssessment> const &assessments,
                       core::JurisdictionTree const &tree)
{
  for (auto const &a : assessments)
  {
    os << "referendum " << a.referendum_id << " rule=" << core::to_string(a.spec.majority_rule)
       << " popular=" << core::to_string(a.outcome.popular);
    if (a.outcome.cantonal)
    {
      os << " cantonal=" << core::to_string(*a.outcome.cantonal)
         << " yes_votes=" << core::format_halves(a.outcome.yes_halves);
    }
    os << " overall=" << core::to_string(a.outcome.overall) << '\n';
    os << "  popular_flip total=" << a.popular_plan.total_flips
       << " target=" << core::to_string(a.popular_plan.achieves)
       << " threshold=" << a.popular_threshold
       << " vulnerable=" << (a.popular_vulnerable ? "yes" : "no") << '\n';
    if (a.cantonal_plan)
    {
      os << "  cantonal_flip total=" << a.cantonal_plan->total_flips
         << " target=" << core::to_string(a.cantonal_plan->achieves) << " cantons=";
      bool first = true;
      for (auto const &[id, flips] : a.cantonal_plan->flips_per_canton)
      {
        os << (first ? "" : ",") << tree.display_name(id) << ':' << flips;
        first = false;
      }
      os << " threshold=" << a.cantonal_threshold
         << " vulnerable=" << (a.cantonal_vulnerable ? "yes" : "no") << '\n';
    }
  }
}

}  // namespace prelim::analysis

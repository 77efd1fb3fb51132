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

#include "prelim/adversary/detection.hpp"

#include "prelim/core/outcome.hpp"

#include <algorithm>
#include <ostream>

namespace prelim::adversary {
namespace {

void counts(std::ostream &os, core::VoteCount const &c, char const *prefix = "")
{
  os << ' ' << prefix << "yes=" << c.yes << ' ' << prefix << "no=" << c.no << ' ' << prefix
     << "blank=" << c.blank << ' ' << prefix << "invalid=" << c.invalid;
}

}  // namespace

DetectionSummary detection_report(simnet::EventTrace const &trace,
                                  core::VoteCount const    &ground_truth)
{
  DetectionSummary                     s;
  std::vector<simnet::PublishRecord const *> complete;

  for (auto const &record : trace.records)
  {
    if (auto const *d = std::get_if<simnet::DetectRecord>(&record))
    {
      s.detections.push_back(*d);
      continue;
    }
    auto const *p = std::get_if<simnet::PublishRecord>(&record);
    if (!p)
    {
      continue;
    }
    if (p->kind == simnet::ReportKind::Final)
    {
      s.final_totals      = p->totals;
      s.final_publication = p->time;
      continue;
    }
    if (p->totals != p->truth)
    {
      s.divergences.push_back({p->time, p->totals, p->truth});
    }
    if (p->leaves_covered < p->leaves_total)
    {
      CoverageGap gap{p->time, p->leaves_covered, p->leaves_total, {}};
      for (auto const &child : trace.root_children)
      {
        if (!p->parts.contains(child))
        {
          gap.missing_children.push_back(child);
        }
      }
      s.coverage_gaps.push_back(std::move(gap));
    }
    else
    {
      complete.push_back(p);
    }
  }

  if (!s.divergences.empty())
  {
    s.first_divergence = s.divergences.front().time;
  }
  if (s.first_divergence && s.final_publication)
  {
    s.integrity_gap = *s.final_publication - *s.first_divergence;
  }
  if (s.final_totals)
  {
    auto const final_decision = core::popular_outcome(*s.final_totals);
    s.outcome_reversals = static_cast<std::size_t>(
        std::count_if(complete.begin(), complete.end(), [&](auto const *p) {
          return core::popular_outcome(p->totals) != final_decision;
        }));
    s.final_matches_ground_truth = *s.final_totals == ground_truth;
  }
  return s;
}

void write_summary(std::ostream &os, DetectionSummary const &s)
{
  os << "# prelimsim detection summary v1\n";
  os << "final";
  if (s.final_publication)
  {
    os << " t=" << *s.final_publication;
    counts(os, *s.final_totals);
  }
  else
  {
    os << " t=none";
  }
  os << " matches_truth=" << (s.final_matches_ground_truth ? 1 : 0) << '\n';
  os << "integrity_gap ticks=" << s.integrity_gap << " first_divergence=";
  if (s.first_divergence)
  {
    os << *s.first_divergence;
  }
  else
  {
    os << "none";
  }
  os << '\n';
  os << "outcome_reversals count=" << s.outcome_reversals << '\n';
  for (auto const &d : s.divergences)
  {
    os << "divergence t=" << d.time;
    counts(os, d.published);
    counts(os, d.expected, "expected_");
    os << '\n';
  }
  for (auto const &g : s.coverage_gaps)
  {
    os << "gap t=" << g.time << " leaves=" << g.leaves_covered << '/' << g.leaves_total
       << " missing=";
    for (std::size_t i = 0; i < g.missing_children.size(); ++i)
    {
      os << (i ? "," : "") << g.missing_children[i].str();
    }
    if (g.missing_children.empty())
    {
      os << '-';
    }
    os << '\n';
  }
  for (auto const &d : s.detections)
  {
    os << "detect t=" << d.time << " node=" << d.node.str() << " from=" << d.from.str()
       << " reason=" << simnet::to_string(d.reason) << " seq=" << d.sequence_no << '\n';
  }
}

}  // namespace prelim::adversary

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

#include "prelim/simnet/node.hpp"

#include "prelim/core/errors.hpp"
#include "prelim/core/jurisdiction.hpp"

#include <stdexcept>
#include <vector>

namespace prelim::simnet {
namespace {

core::VoteCount sum_of(std::map<core::JurisdictionId, Report> const &reports)
{
  std::vector<core::VoteCount> counts;
  counts.reserve(reports.size());
  for (auto const &[child, r] : reports)
  {
    counts.push_back(r.counts);
  }
  return core::accumulate(counts);
}

}  // namespace

char const *to_string(FeasibilityFailure f) noexcept
{
  switch (f)
  {
  case FeasibilityFailure::OverEligible:
    return "OverEligible";
  case FeasibilityFailure::StaleSequence:
    return "StaleSequence";
  case FeasibilityFailure::UnknownSender:
    return "UnknownSender";
  }
  return "?";
}

std::optional<FeasibilityFailure> feasibility_check(Report const                 &report,
                                                    core::JurisdictionTree const &tree,
                                                    core::JurisdictionId const   &receiver,
                                                    LastSeenSeq const            &last_seen)
{
  if (!tree.contains(report.sender) || tree.parent(report.sender) != receiver)
  {
    return FeasibilityFailure::UnknownSender;
  }
  if (auto eligible = tree.eligible(report.sender))
  {
    std::uint64_t total = 0;
    try
    {
      total = report.counts.total();
    }
    catch (ArithmeticOverflow const &)
    {
      return FeasibilityFailure::OverEligible;
    }
    if (total > *eligible)
    {
      return FeasibilityFailure::OverEligible;
    }
  }
  auto it = last_seen.find({report.sender, report.election_id});
  auto const last = it == last_seen.end() ? 0 : it->second;
  if (report.sequence_no <= last)
  {
    return FeasibilityFailure::StaleSequence;
  }
  return std::nullopt;
}

PreliminaryResult node_receive_preliminary(NodeState &state, Report const &report,
                                           ChannelSpec const            &channel,
                                           core::JurisdictionTree const &tree, Tick now)
{
  if (report.kind != ReportKind::Preliminary || !carries(channel, ReportKind::Preliminary))
  {
    throw std::invalid_argument{"preliminary path got a Final report or a postal channel"};
  }

  PreliminaryResult result;
  result.failure = feasibility_check(report, tree, state.id, state.last_seen_seq);
  if (result.failure)
  {
    return result;
  }

  state.last_seen_seq[{report.sender, report.election_id}] = report.sequence_no;
  state.received_prelim[report.sender]                     = report;

  Report up;
  up.election_id = report.election_id;
  up.sender      = state.id;
  up.sequence_no = state.next_seq++;
  up.counts      = sum_of(state.received_prelim);
  up.kind        = ReportKind::Preliminary;
  up.emitted_at  = now;
  result.forwarded = std::move(up);
  return result;
}

std::optional<Report> node_receive_final(NodeState &state, Report const &report,
                                         core::JurisdictionTree const &tree, Tick now)
{
  if (report.kind != ReportKind::Final)
  {
    throw std::invalid_argument{"final path got a Preliminary report"};
  }
  if (tree.parent(report.sender) != state.id)
  {
    throw std::invalid_argument{"final report from a non-child: " + report.sender.str()};
  }

  auto [it, inserted] = state.received_final.emplace(report.sender, report);
  if (!inserted)
  {
    if (it->second.counts != report.counts || it->second.election_id != report.election_id)
    {
      throw DuplicateFinal{"second, different Final from " + report.sender.str()};
    }
    return std::nullopt;
  }

  if (state.final_emitted || state.received_final.size() < tree.children(state.id).size())
  {
    return std::nullopt;
  }

  state.final_emitted = true;
  Report up;
  up.election_id = report.election_id;
  up.sender      = state.id;
  up.sequence_no = state.next_seq++;
  up.counts      = sum_of(state.received_final);
  up.kind        = ReportKind::Final;
  up.emitted_at  = now;
  return up;
}

}  // namespace prelim::simnet

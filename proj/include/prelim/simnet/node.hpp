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

#include "prelim/simnet/channel.hpp"
#include "prelim/simnet/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace prelim::core {
class JurisdictionTree;
}

namespace prelim::simnet {

/// Highest accepted sequence number per (child, election).
using LastSeenSeq = std::map<std::pair<core::JurisdictionId, std::string>, std::uint64_t>;

struct NodeState
{
  core::JurisdictionId                      id;
  std::map<core::JurisdictionId, Report>    received_prelim;
  std::map<core::JurisdictionId, Report>    received_final;
  LastSeenSeq                               last_seen_seq;
  std::optional<core::VoteCount>            ground_truth;  // leaves only
  std::uint64_t                             next_seq      = 1;
  bool                                      final_emitted = false;
};

enum class FeasibilityFailure
{
  OverEligible,
  StaleSequence,
  UnknownSender
};

char const *to_string(FeasibilityFailure f) noexcept;

/// Basic plausibility of a preliminary report arriving at `receiver`: the
/// sender must be a direct child, its total must not exceed the sender's
/// eligible voters and its sequence number must be fresh.
std::optional<FeasibilityFailure> feasibility_check(Report const                 &report,
                                                    core::JurisdictionTree const &tree,
                                                    core::JurisdictionId const   &receiver,
                                                    LastSeenSeq const            &last_seen);

struct PreliminaryResult
{
  std::optional<Report>             forwarded;
  std::optional<FeasibilityFailure> failure;
};

/// Accepts or discards one preliminary report. An accepted report replaces
/// the child's previous one and immediately yields the node's updated
/// accumulation (a full replacement total, not a delta), stamped `now`.
PreliminaryResult node_receive_preliminary(NodeState &state, Report const &report,
                                           ChannelSpec const            &channel,
                                           core::JurisdictionTree const &tree, Tick now);

/// Stores a Final report; returns the node's accumulated Final exactly once,
/// when every child has reported. Throws DuplicateFinal when a child sends a
/// second, different Final.
std::optional<Report> node_receive_final(NodeState &state, Report const &report,
                                         core::JurisdictionTree const &tree, Tick now);

}  // namespace prelim::simnet

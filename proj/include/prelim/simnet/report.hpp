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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace prelim::simnet {

/// Simulated time in integer ticks.
using Tick = std::int64_t;

enum class ReportKind
{
  Preliminary,
  Final
};

char const               *to_string(ReportKind k) noexcept;
std::optional<ReportKind> parse_report_kind(std::string_view s) noexcept;

/// The unit that flows up the hierarchy. sequence_no is 1-based and strictly
/// increasing per (sender, election_id).
struct Report
{
  std::string          election_id;
  core::JurisdictionId sender;
  std::uint64_t        sequence_no = 0;
  core::VoteCount      counts;
  ReportKind           kind       = ReportKind::Preliminary;
  Tick                 emitted_at = 0;

  friend bool operator==(Report const &, Report const &) = default;
};

/// Directed link from a jurisdiction to its parent.
struct Edge
{
  core::JurisdictionId sender;
  core::JurisdictionId receiver;

  std::string str() const;

  friend auto operator<=>(Edge const &, Edge const &) = default;
};

/// Who produced a delivered report; visible only to the trace, never to nodes.
enum class Origin
{
  Genuine,
  Tampered,
  Forged
};

char const *to_string(Origin o) noexcept;

}  // namespace prelim::simnet

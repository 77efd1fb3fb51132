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

#include <cstdint>
#include <iosfwd>
#include <span>

namespace prelim::core {

enum class Decision
{
  Accepted,
  Rejected
};

char const *to_string(Decision d) noexcept;

Decision opposite(Decision d) noexcept;

/// Ballot counts of one jurisdiction. Only yes/no decide outcomes; blank and
/// invalid ballots matter for feasibility (turnout) checks.
struct VoteCount
{
  std::uint64_t yes     = 0;
  std::uint64_t no      = 0;
  std::uint64_t blank   = 0;
  std::uint64_t invalid = 0;

  /// Throws ArithmeticOverflow if the sum is not representable.
  std::uint64_t total() const;

  friend bool operator==(VoteCount const &, VoteCount const &) = default;
};

std::ostream &operator<<(std::ostream &os, VoteCount const &c);

/// Component-wise checked sum. Throws ArithmeticOverflow instead of wrapping.
VoteCount operator+(VoteCount const &a, VoteCount const &b);

/// Component-wise sum of any number of reports; the empty sum is zero.
VoteCount accumulate(std::span<VoteCount const> reports);

}  // namespace prelim::core

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

#include "prelim/core/vote_count.hpp"

#include "prelim/core/errors.hpp"

#include <ostream>

namespace prelim::core {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
  {
    throw ArithmeticOverflow{"vote count sum exceeds 64-bit range"};
  }
  return out;
}

}  // namespace

char const *to_string(Decision d) noexcept
{
  return d == Decision::Accepted ? "Accepted" : "Rejected";
}

Decision opposite(Decision d) noexcept
{
  return d == Decision::Accepted ? Decision::Rejected : Decision::Accepted;
}

std::uint64_t VoteCount::total() const
{
  return checked_add(checked_add(yes, no), checked_add(blank, invalid));
}

std::ostream &operator<<(std::ostream &os, VoteCount const &c)
{
  return os << "(yes=" << c.yes << ", no=" << c.no << ", blank=" << c.blank
            << ", invalid=" << c.invalid << ")";
}

VoteCount operator+(VoteCount const &a, VoteCount const &b)
{
  return {checked_add(a.yes, b.yes), checked_add(a.no, b.no), checked_add(a.blank, b.blank),
          checked_add(a.invalid, b.invalid)};
}

VoteCount accumulate(std::span<VoteCount const> reports)
{
  VoteCount sum;
  for (auto const &r : reports)
  {
    sum = sum + r;
  }
  return sum;
}

}  // namespace prelim::core

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

#include "prelim/simnet/report.hpp"

namespace prelim::simnet {

char const *to_string(ReportKind k) noexcept
{
  return k == ReportKind::Preliminary ? "Preliminary" : "Final";
}

std::optional<ReportKind> parse_report_kind(std::string_view s) noexcept
{
  if (s == "Preliminary")
  {
    return ReportKind::Preliminary;
  }
  if (s == "Final")
  {
    return ReportKind::Final;
  }
  return std::nullopt;
}

std::string Edge::str() const
{
  return sender.str() + "->" + receiver.str();
}

char const *to_string(Origin o) noexcept
{
  switch (o)
  {
  case Origin::Genuine:
    return "genuine";
  case Origin::Tampered:
    return "tampered";
  case Origin::Forged:
    return "forged";
  }
  return "?";
}

}  // namespace prelim::simnet

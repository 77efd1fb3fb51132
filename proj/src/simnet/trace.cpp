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

#include "prelim/simnet/trace.hpp"

#include <ostream>
#include <sstream>

namespace prelim::simnet {
namespace {

void counts(std::ostream &os, core::VoteCount const &c, char const *prefix = "")
{
  os << ' ' << prefix << "yes=" << c.yes << ' ' << prefix << "no=" << c.no << ' ' << prefix
     << "blank=" << c.blank << ' ' << prefix << "invalid=" << c.invalid;
}

void report_fields(std::ostream &os, Report const &r)
{
  os << " kind=" << to_string(r.kind) << " seq=" << r.sequence_no;
  counts(os, r.counts);
}

void quoted(std::ostream &os, std::string const &s)
{
  os << '"';
  for (char c : s)
  {
    if (c == '"' || c == '\\')
    {
      os << '\\';
    }
    os << c;
  }
  os << '"';
}

struct Writer
{
  std::ostream &os;

  void operator()(EmitRecord const &r) const
  {
    os << "emit t=" << r.time << " node=" << r.node.str();
    report_fields(os, r.report);
  }

  void operator()(AttackRecord const &r) const
  {
    os << "attack t=" << r.time << " id=" << r.attack << " type=" << adversary::to_string(r.kind)
       << " mode=" << (r.omniscient ? "omniscient" : "blind") << " from=" << r.edge.sender.str()
       << " to=" << r.edge.receiver.str() << " action=";
    quoted(os, r.action);
  }

  void operator()(DeliverRecord const &r) const
  {
    os << "deliver t=" << r.time << " from=" << r.edge.sender.str()
       << " to=" << r.edge.receiver.str();
    report_fields(os, r.report);
    os << " origin=" << to_string(r.origin) << " result=" << (r.accepted ? "accepted" : "rejected");
  }

  void operator()(DetectRecord const &r) const
  {
    os << "detect t=" << r.time << " node=" << r.node.str() << " from=" << r.from.str()
       << " reason=" << to_string(r.reason) << " seq=" << r.sequence_no;
    if (!r.detail.empty())
    {
      os << " detail=";
      quoted(os, r.detail);
    }
  }

  void operator()(PublishRecord const &r) const
  {
    os << "publish t=" << r.time << " kind=" << to_string(r.kind) << " children=" << r.parts.size()
       << " leaves=" << r.leaves_covered << '/' << r.leaves_total;
    counts(os, r.totals);
    counts(os, r.truth, "truth_");
  }
};

}  // namespace

char const *to_string(DetectReason r) noexcept
{
  switch (r)
  {
  case DetectReason::OverEligible:
    return "OverEligible";
  case DetectReason::StaleSequence:
    return "StaleSequence";
  case DetectReason::UnknownSender:
    return "UnknownSender";
  case DetectReason::SignatureRejected:
    return "SignatureRejected";
  case DetectReason::RelayMismatch:
    return "RelayMismatch";
  }
  return "?";
}

void write_trace(std::ostream &os, EventTrace const &trace)
{
  os << "# prelimsim trace v1\n";
  os << "# scenario=" << trace.scenario << " election=" << trace.election_id
     << " seed=" << trace.seed << " root=" << trace.root.str() << " leaves=" << trace.leaves_total
     << '\n';
  Writer w{os};
  for (auto const &rec : trace.records)
  {
    std::visit(w, rec);
    os << '\n';
  }
}

std::string to_text(EventTrace const &trace)
{
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

std::vector<PublicationPoint> publish_timeline(EventTrace const &trace)
{
  std::vector<PublicationPoint> out;
  for (auto const &rec : trace.records)
  {
    if (auto const *p = std::get_if<PublishRecord>(&rec))
    {
      out.push_back({p->time, p->totals, p->kind});
    }
  }
  return out;
}

}  // namespace prelim::simnet

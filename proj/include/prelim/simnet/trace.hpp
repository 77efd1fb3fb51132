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

#include "prelim/adversary/attack.hpp"
#include "prelim/simnet/report.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace prelim::simnet {

enum class DetectReason
{
  OverEligible,
  StaleSequence,
  UnknownSender,
  SignatureRejected,
  RelayMismatch
};

char const *to_string(DetectReason r) noexcept;

struct EmitRecord
{
  Tick                 time = 0;
  core::JurisdictionId node;
  Report               report;
};

struct AttackRecord
{
  Tick                   time = 0;
  std::size_t            attack = 0;
  adversary::AttackKind  kind   = adversary::AttackKind::Tamper;
  Edge                   edge;
  bool                   omniscient = false;
  std::string            action;
};

struct DeliverRecord
{
  Tick   time = 0;
  Edge   edge;
  Report report;
  Origin origin   = Origin::Genuine;
  bool   accepted = false;
};

struct DetectRecord
{
  Tick                 time = 0;
  core::JurisdictionId node;
  core::JurisdictionId from;
  DetectReason         reason      = DetectReason::StaleSequence;
  std::uint64_t        sequence_no = 0;
  std::string          detail;
};

/// A running total published by the root.
struct PublishRecord
{
  Tick            time = 0;
  ReportKind      kind = ReportKind::Preliminary;
  core::VoteCount totals;
  /// Ground truth of the leaves this publication claims to cover.
  core::VoteCount truth;
  std::size_t     leaves_covered = 0;
  std::size_t     leaves_total   = 0;
  /// Latest accepted contribution of each reporting child of the root.
  std::map<core::JurisdictionId, core::VoteCount> parts;
};

using TraceRecord =
    std::variant<EmitRecord, AttackRecord, DeliverRecord, DetectRecord, PublishRecord>;

struct EventTrace
{
  std::string              scenario;
  std::string              election_id;
  std::uint64_t            seed = 0;
  core::JurisdictionId     root;
  std::vector<core::JurisdictionId> root_children;
  std::size_t              leaves_total = 0;
  std::vector<TraceRecord> records;
};

/// One record per line: "<kind> t=<tick> key=value ...", preceded by two
/// '#' header lines. Byte-stable for equal traces.
void        write_trace(std::ostream &os, EventTrace const &trace);
std::string to_text(EventTrace const &trace);

struct PublicationPoint
{
  Tick            time = 0;
  core::VoteCount totals;
  ReportKind      kind = ReportKind::Preliminary;

  friend bool operator==(PublicationPoint const &, PublicationPoint const &) = default;
};

/// The root's publications in order, ending with the Final one.
std::vector<PublicationPoint> publish_timeline(EventTrace const &trace);

}  // namespace prelim::simnet

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

#include "prelim/simnet/report.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace prelim::simnet {

enum class ChannelPreset
{
  Telephone,
  Fax,
  Email,
  DedicatedSoftware,
  PostalFinal
};

char const                  *to_string(ChannelPreset p) noexcept;
std::optional<ChannelPreset> parse_channel_preset(std::string_view s) noexcept;

/// Security properties of a transmission channel.
///
/// integrity:    in-flight modification impossible
/// authenticity: sender identity unforgeable (no forged injection)
/// delayable:    an adversary on the path may hold messages
struct ChannelSpec
{
  std::string                  name;
  bool                         integrity    = false;
  bool                         authenticity = false;
  bool                         delayable    = true;
  Tick                         base_latency = 1;
  std::optional<ChannelPreset> preset;
  /// Set by secauth::wrap_channel; reports on this channel are signed.
  bool signed_reports = false;
};

/// Channel with the flags the preset prescribes. DedicatedSoftware defaults to
/// unprotected: none of the deployed tools has had a public security review.
ChannelSpec preset_channel(ChannelPreset preset, std::string name, Tick latency);

/// Throws ConfigError when a preset's fixed flags were overridden.
void validate_channel(ChannelSpec const &channel);

/// PostalFinal carries only Final reports; every other channel only Preliminary.
bool carries(ChannelSpec const &channel, ReportKind kind) noexcept;

}  // namespace prelim::simnet

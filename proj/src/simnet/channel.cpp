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

#include "prelim/simnet/channel.hpp"

#include "prelim/core/errors.hpp"

namespace prelim::simnet {

char const *to_string(ChannelPreset p) noexcept
{
  switch (p)
  {
  case ChannelPreset::Telephone:
    return "Telephone";
  case ChannelPreset::Fax:
    return "Fax";
  case ChannelPreset::Email:
    return "Email";
  case ChannelPreset::DedicatedSoftware:
    return "DedicatedSoftware";
  case ChannelPreset::PostalFinal:
    return "PostalFinal";
  }
  return "?";
}

std::optional<ChannelPreset> parse_channel_preset(std::string_view s) noexcept
{
  for (auto p : {ChannelPreset::Telephone, ChannelPreset::Fax, ChannelPreset::Email,
                 ChannelPreset::DedicatedSoftware, ChannelPreset::PostalFinal})
  {
    if (s == to_string(p))
    {
      return p;
    }
  }
  return std::nullopt;
}

ChannelSpec preset_channel(ChannelPreset preset, std::string name, Tick latency)
{
  ChannelSpec c;
  c.name         = std::move(name);
  c.preset       = preset;
  c.base_latency = latency;
  c.delayable    = true;
  bool const paper_trail = preset == ChannelPreset::PostalFinal;
  c.integrity    = paper_trail;
  c.authenticity = paper_trail;
  return c;
}

void validate_channel(ChannelSpec const &channel)
{
  if (channel.base_latency < 0)
  {
    throw ConfigError{"channel " + channel.name + ": negative latency"};
  }
  if (!channel.preset || channel.signed_reports)
  {
    return;
  }
  switch (*channel.preset)
  {
  case ChannelPreset::PostalFinal:
    if (!channel.integrity || !channel.authenticity || !channel.delayable)
    {
      throw ConfigError{"channel " + channel.name +
                        ": PostalFinal requires integrity=1 authenticity=1 delayable=1"};
    }
    break;
  case ChannelPreset::Telephone:
  case ChannelPreset::Fax:
  case ChannelPreset::Email:
    if (channel.integrity || channel.authenticity || !channel.delayable)
    {
      throw ConfigError{"channel " + channel.name + ": " + to_string(*channel.preset) +
                        " requires integrity=0 authenticity=0 delayable=1"};
    }
    break;
  case ChannelPreset::DedicatedSoftware:
    break;
  }
}

bool carries(ChannelSpec const &channel, ReportKind kind) noexcept
{
  bool const postal = channel.preset == ChannelPreset::PostalFinal;
  return postal == (kind == ReportKind::Final);
}

}  // namespace prelim::simnet

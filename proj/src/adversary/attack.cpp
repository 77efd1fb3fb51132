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

#include "prelim/adversary/attack.hpp"

#include "prelim/core/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace prelim::adversary {
namespace {

std::string counts_text(core::VoteCount const &c)
{
  std::ostringstream os;
  os << c.yes << ',' << c.no << ',' << c.blank << ',' << c.invalid;
  return os.str();
}

bool kind_matches(AttackSpec const &spec)
{
  switch (spec.kind)
  {
  case AttackKind::Tamper:
    return std::holds_alternative<TamperParams>(spec.params);
  case AttackKind::Delay:
    return std::holds_alternative<DelayParams>(spec.params);
  case AttackKind::FrontRun:
    return std::holds_alternative<FrontRunParams>(spec.params);
  }
  return false;
}

}  // namespace

char const *to_string(AttackKind k) noexcept
{
  switch (k)
  {
  case AttackKind::Tamper:
    return "tamper";
  case AttackKind::Delay:
    return "delay";
  case AttackKind::FrontRun:
    return "frontrun";
  }
  return "?";
}

core::VoteCount mutate(core::VoteCount const &counts, Mutation const &mutation)
{
  return std::visit(
      [&](auto const &m) -> core::VoteCount {
        using T = std::decay_t<decltype(m)>;
        auto out = counts;
        if constexpr (std::is_same_v<T, SwapYesNo>)
        {
          std::swap(out.yes, out.no);
        }
        else if constexpr (std::is_same_v<T, SetCounts>)
        {
          out = m.counts;
        }
        else
        {
          if (m.delta >= 0)
          {
            auto const moved = std::min<std::uint64_t>(static_cast<std::uint64_t>(m.delta), out.no);
            out.no -= moved;
            out.yes += moved;
          }
          else
          {
            auto const want  = static_cast<std::uint64_t>(-(m.delta + 1)) + 1;
            auto const moved = std::min(want, out.yes);
            out.yes -= moved;
            out.no += moved;
          }
        }
        return out;
      },
      mutation);
}

std::string describe(Mutation const &mutation)
{
  return std::visit(
      [](auto const &m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SwapYesNo>)
        {
          return "swap";
        }
        else if constexpr (std::is_same_v<T, SetCounts>)
        {
          return "set:" + counts_text(m.counts);
        }
        else
        {
          return std::string{"shift:"} + (m.delta >= 0 ? "+" : "") + std::to_string(m.delta);
        }
      },
      mutation);
}

bool Trigger::selects_election(simnet::Report const &report) const
{
  return !election_id || *election_id == report.election_id;
}

void check_capability(AttackSpec const &spec, simnet::ChannelSpec const &channel)
{
  if (!kind_matches(spec))
  {
    throw std::invalid_argument{"attack parameters do not match the attack kind"};
  }
  auto const edge = spec.target_edge.str();
  switch (spec.kind)
  {
  case AttackKind::Tamper:
    if (channel.integrity)
    {
      throw CapabilityError{"tamper on " + edge + ": channel '" + channel.name +
                            "' protects integrity"};
    }
    break;
  case AttackKind::FrontRun:
    if (channel.authenticity)
    {
      throw CapabilityError{"frontrun on " + edge + ": channel '" + channel.name +
                            "' protects authenticity"};
    }
    break;
  case AttackKind::Delay:
    if (!channel.delayable)
    {
      throw CapabilityError{"delay on " + edge + ": channel '" + channel.name +
                            "' cannot be delayed"};
    }
    break;
  }
}

simnet::Report apply_tamper(simnet::Report const &report, Mutation const &mutation,
                            simnet::ChannelSpec const &channel)
{
  if (channel.integrity)
  {
    throw CapabilityError{"tamper: channel '" + channel.name + "' protects integrity"};
  }
  if (report.kind != simnet::ReportKind::Preliminary)
  {
    throw CapabilityError{"tamper: Final reports travel with integrity"};
  }
  auto out   = report;
  out.counts = mutate(report.counts, mutation);
  return out;
}

Tick apply_delay(Tick scheduled, Tick hold_ticks, simnet::ChannelSpec const &channel)
{
  if (!channel.delayable)
  {
    throw CapabilityError{"delay: channel '" + channel.name + "' cannot be delayed"};
  }
  if (hold_ticks < 0)
  {
    throw std::invalid_argument{"delay: negative hold"};
  }
  return scheduled + hold_ticks;
}

Injection apply_front_run(simnet::Edge const &edge, simnet::Report const &forged,
                          simnet::ChannelSpec const &channel, Tick now)
{
  if (channel.authenticity)
  {
    throw CapabilityError{"frontrun: channel '" + channel.name + "' protects authenticity"};
  }
  if (forged.sender != edge.sender)
  {
    throw std::invalid_argument{"frontrun: forged sender " + forged.sender.str() +
                                " is not the sender of " + edge.str()};
  }
  return Injection{forged, now};
}

simnet::Report forge_report(FrontRunParams const &params, simnet::Report const &genuine)
{
  auto out        = genuine;
  out.counts      = params.forged;
  out.sequence_no = params.sequence_no.value_or(genuine.sequence_no + params.sequence_offset);
  return out;
}

Adversary::Adversary(std::vector<AttackSpec> specs)
  : specs_{std::move(specs)}
  , matched_(specs_.size(), 0)
{}

std::vector<Transmission> Adversary::intercept(simnet::Edge const        &edge,
                                               simnet::ChannelSpec const &channel,
                                               simnet::Report const &genuine, Tick now,
                                               Tick deliver_at, std::vector<AttackAction> &actions)
{
  std::vector<Transmission> out;
  Transmission              own{genuine, deliver_at, simnet::Origin::Genuine};

  for (std::size_t i = 0; i < specs_.size(); ++i)
  {
    auto const &spec = specs_[i];
    if (spec.target_edge != edge || !spec.trigger.selects_election(genuine) ||
        genuine.kind != simnet::ReportKind::Preliminary)
    {
      continue;
    }
    if (spec.trigger.first_n && matched_[i] >= *spec.trigger.first_n)
    {
      continue;
    }
    ++matched_[i];

    AttackAction action{i, spec.kind, spec.omniscient, {}};
    if (auto const *p = std::get_if<TamperParams>(&spec.params))
    {
      auto const before = own.report.counts;
      own.report        = apply_tamper(own.report, p->mutation, channel);
      own.origin        = simnet::Origin::Tampered;
      action.action     = describe(p->mutation) + " " + counts_text(before) + " -> " +
                      counts_text(own.report.counts);
    }
    else if (auto const *p = std::get_if<DelayParams>(&spec.params))
    {
      own.deliver_at = apply_delay(own.deliver_at, p->hold_ticks, channel);
      action.action  = "hold " + std::to_string(p->hold_ticks) + " until t=" +
                      std::to_string(own.deliver_at);
    }
    else if (auto const *p = std::get_if<FrontRunParams>(&spec.params))
    {
      auto const inj = apply_front_run(edge, forge_report(*p, genuine), channel, now);
      action.action  = "inject seq=" + std::to_string(inj.forged.sequence_no) + " " +
                      counts_text(inj.forged.counts) + " ahead of seq=" +
                      std::to_string(genuine.sequence_no);
      out.push_back({inj.forged, inj.deliver_at, simnet::Origin::Forged});
    }
    actions.push_back(std::move(action));
  }
  out.push_back(std::move(own));
  return out;
}

}  // namespace prelim::adversary

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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace prelim::adversary {

using simnet::Tick;

enum class AttackKind
{
  Tamper,
  Delay,
  FrontRun
};

char const *to_string(AttackKind k) noexcept;

struct SwapYesNo
{
  friend bool operator==(SwapYesNo, SwapYesNo) = default;
};

struct SetCounts
{
  core::VoteCount counts;

  friend bool operator==(SetCounts const &, SetCounts const &) = default;
};

/// Moves `delta` ballots from no to yes (negative: yes to no), clamped to the
/// ballots available, so totals never change.
struct Shift
{
  std::int64_t delta = 0;

  friend bool operator==(Shift, Shift) = default;
};

using Mutation = std::variant<SwapYesNo, SetCounts, Shift>;

core::VoteCount mutate(core::VoteCount const &counts, Mutation const &mutation);
std::string     describe(Mutation const &mutation);

/// Which reports on the target edge an attack applies to.
struct Trigger
{
  std::optional<std::string>   election_id;
  std::optional<std::uint64_t> first_n;  // unset: every matching report

  bool selects_election(simnet::Report const &report) const;
};

struct TamperParams
{
  Mutation mutation;
};

struct DelayParams
{
  Tick hold_ticks = 0;
};

struct FrontRunParams
{
  core::VoteCount              forged;
  std::optional<std::uint64_t> sequence_no;  // explicit forged sequence number
  std::uint64_t                sequence_offset = 1000;
};

struct AttackSpec
{
  AttackKind                                              kind = AttackKind::Tamper;
  simnet::Edge                                            target_edge;
  Trigger                                                 trigger;
  std::variant<TamperParams, DelayParams, FrontRunParams> params;
  /// Parameters were tailored with knowledge of the ground truth. Labelled in
  /// the trace; ordinary attacks are fixed before the run and blind.
  bool omniscient = false;
};

/// Throws CapabilityError when the channel's flags forbid the attack kind:
/// Tamper needs integrity=false, FrontRun authenticity=false, Delay delayable.
void check_capability(AttackSpec const &spec, simnet::ChannelSpec const &channel);

/// Replaces an in-flight preliminary report by its mutated copy.
simnet::Report apply_tamper(simnet::Report const &report, Mutation const &mutation,
                            simnet::ChannelSpec const &channel);

/// Returns the postponed delivery time; the content is untouched.
Tick apply_delay(Tick scheduled, Tick hold_ticks, simnet::ChannelSpec const &channel);

struct Injection
{
  simnet::Report forged;
  Tick           deliver_at = 0;
};

/// Schedules a forged report on `edge` for delivery at `now`, ahead of the
/// genuine one still in flight.
Injection apply_front_run(simnet::Edge const &edge, simnet::Report const &forged,
                          simnet::ChannelSpec const &channel, Tick now);

/// The forged report an attacker sends in place of `genuine`. Without an
/// explicit number the forged sequence is genuine + offset, so the genuine
/// report is later rejected as stale.
simnet::Report forge_report(FrontRunParams const &params, simnet::Report const &genuine);

struct Transmission
{
  simnet::Report report;
  Tick           deliver_at = 0;
  simnet::Origin origin     = simnet::Origin::Genuine;
};

struct AttackAction
{
  std::size_t attack = 0;
  AttackKind  kind   = AttackKind::Tamper;
  bool        omniscient = false;
  std::string action;
};

/// Channel interceptor for all configured attacks. Invoked by the event loop
/// for every preliminary report put on an edge.
class Adversary
{
public:
  Adversary() = default;
  explicit Adversary(std::vector<AttackSpec> specs);

  /// Returns what actually gets delivered, injected reports first.
  std::vector<Transmission> intercept(simnet::Edge const &edge, simnet::ChannelSpec const &channel,
                                      simnet::Report const &genuine, Tick now, Tick deliver_at,
                                      std::vector<AttackAction> &actions);

  std::vector<AttackSpec> const &specs() const noexcept
  {
    return specs_;
  }

private:
  std::vector<AttackSpec>    specs_;
  std::vector<std::uint64_t> matched_;
};

}  // namespace prelim::adversary

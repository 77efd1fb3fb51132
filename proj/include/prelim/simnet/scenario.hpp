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
#include "prelim/core/jurisdiction.hpp"
#include "prelim/core/outcome.hpp"
#include "prelim/simnet/channel.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prelim::simnet {

struct NodeDecl
{
  core::JurisdictionId               id;
  std::optional<std::uint64_t>       eligible;
  std::optional<core::CantonWeight>  weight;
  std::optional<std::string>         display_name;
  std::optional<std::string>         channel;
  std::string                        source;
  std::size_t                        line = 0;
};

struct TruthDecl
{
  core::JurisdictionId id;
  core::VoteCount      counts;
  std::string          source;
  std::size_t          line = 0;
};

struct AttackDecl
{
  adversary::AttackSpec spec;
  /// Tamper whose shift is derived from the ground truth at build time so the
  /// popular outcome just flips. Requires omniscient.
  bool        flip_popular = false;
  std::string source;
  std::size_t line = 0;
};

/// Honest counting error on leaf preliminary reports.
struct NoiseModel
{
  double        probability = 0.0;
  std::uint64_t magnitude   = 0;
};

enum class SigningMode
{
  RelayAndCountersign,  // forward children's signed reports with the own signed total
  Resign                // sign only the own accumulation
};

struct SecureDecl
{
  SigningMode mode   = SigningMode::RelayAndCountersign;
  std::string scheme = "schnorr-test";
};

struct Timing
{
  Tick count_time     = 60;    // leaves finish counting
  Tick count_jitter   = 0;     // extra uniform [0, count_jitter]
  Tick latency_jitter = 0;     // extra uniform [0, latency_jitter] per transmission
  Tick postal_latency = 1440;  // paper trail per hop
};

/// Parsed scenario file. See docs/scenario-format.md.
struct ScenarioConfig
{
  std::string                        source;
  std::string                        name = "scenario";
  std::string                        election_id = "election";
  core::MajorityRule                 rule        = core::MajorityRule::PopularOnly;
  std::uint64_t                      seed        = 0;
  Timing                             timing;
  std::map<std::string, ChannelSpec> channels;
  std::vector<NodeDecl>              nodes;
  std::vector<TruthDecl>             truths;
  std::vector<AttackDecl>            attacks;
  std::optional<NoiseModel>          noise;
  std::optional<SecureDecl>          secure;
};

/// Throws ConfigError with source and line of the offending directive.
/// `include` directives resolve relative to `base_dir`.
ScenarioConfig parse_scenario(std::string_view text, std::string const &source,
                              std::filesystem::path const &base_dir);

ScenarioConfig load_scenario(std::filesystem::path const &path);

/// The jurisdiction tree declared by the node directives.
core::JurisdictionTree build_tree(ScenarioConfig const &config);

}  // namespace prelim::simnet

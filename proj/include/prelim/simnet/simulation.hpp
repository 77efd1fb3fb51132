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

#include "prelim/simnet/scenario.hpp"
#include "prelim/simnet/trace.hpp"

#include <memory>
#include <optional>

namespace prelim::simnet {

/// A validated, seeded scenario ready to run once. Not shareable during run().
class Simulation
{
public:
  Simulation(Simulation &&) noexcept;
  Simulation &operator=(Simulation &&) noexcept;
  ~Simulation();

  ScenarioConfig const         &config() const;
  core::JurisdictionTree const &tree() const;
  std::uint64_t                 seed() const;

  /// Number of child -> parent edges.
  std::size_t edge_count() const;

  /// Effective preliminary channel of the edge leaving `sender`.
  ChannelSpec const &channel(core::JurisdictionId const &sender) const;

  core::VoteCount ground_truth_total() const;

  /// Executes every event to quiescence. Throws std::logic_error when called twice.
  EventTrace run();

private:
  friend Simulation build_scenario(ScenarioConfig const &, std::optional<std::uint64_t>);
  struct Impl;
  explicit Simulation(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Validates the scenario and seeds one counting event per leaf. The seed
/// argument overrides the scenario's own seed.
///
/// Throws ConfigError for structural problems and CapabilityError for attacks
/// the target channel does not permit.
Simulation build_scenario(ScenarioConfig const &config,
                          std::optional<std::uint64_t> seed = std::nullopt);

EventTrace run(Simulation &sim);

}  // namespace prelim::simnet

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

#include "prelim/simnet/simulation.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace prelim::fixture {

inline std::filesystem::path data_dir()
{
  return PRELIM_DATA_DIR;
}

inline std::filesystem::path scenario_dir()
{
  return std::filesystem::path{PRELIM_TEST_DIR} / "scenarios";
}

inline std::filesystem::path golden_dir()
{
  return std::filesystem::path{PRELIM_TEST_DIR} / "golden";
}

inline std::string read_file(std::filesystem::path const &path)
{
  std::ifstream      in{path, std::ios::binary};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline simnet::ScenarioConfig scenario(std::string const &name)
{
  auto const in_tests = scenario_dir() / (name + ".scenario");
  if (std::filesystem::exists(in_tests))
  {
    return simnet::load_scenario(in_tests);
  }
  return simnet::load_scenario(data_dir() / (name + ".scenario"));
}

inline simnet::ScenarioConfig parse(std::string const &text)
{
  return simnet::parse_scenario(text, "inline", scenario_dir());
}

inline simnet::EventTrace run(simnet::ScenarioConfig const &config,
                              std::optional<std::uint64_t> seed = std::nullopt)
{
  auto sim = simnet::build_scenario(config, seed);
  return sim.run();
}

template <typename T>
std::vector<T> records_of(simnet::EventTrace const &trace)
{
  std::vector<T> out;
  for (auto const &r : trace.records)
  {
    if (auto const *x = std::get_if<T>(&r))
    {
      out.push_back(*x);
    }
  }
  return out;
}

}  // namespace prelim::fixture

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

#include "prelim/core/jurisdiction.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace prelim::core {

struct SwissCanton
{
  std::string_view abbreviation;
  std::string_view name;
  std::uint64_t    eligible_2019;
  CantonWeight     weight;
  std::string_view capital;  // path segment of the capital municipality
};

/// The 26 cantons in alphabetical order of their names.
std::span<SwissCanton const> swiss_cantons();

/// CH root with the 26 cantons as children (no municipalities).
JurisdictionTree swiss_tree();

}  // namespace prelim::core

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

#include <iosfwd>
#include <string>
#include <vector>

namespace prelim::cli {

inline constexpr int kExitOk     = 0;
inline constexpr int kExitError  = 1;  // internal or I/O failure
inline constexpr int kExitConfig = 2;  // bad flags, scenario, tree or data

/// Runs one invocation ("simulate", "analyze", "flip" or "keys" plus flags).
/// Human-readable output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace prelim::cli

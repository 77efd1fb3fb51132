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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prelim::secauth {

using Bytes = std::vector<std::uint8_t>;

/// Initializes libsodium once; safe to call from any thread.
void ensure_sodium();

std::string to_hex(std::span<std::uint8_t const> bytes);

/// Throws EncodingError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

Bytes as_bytes(std::string_view text);

Bytes sha256(std::span<std::uint8_t const> data);

}  // namespace prelim::secauth

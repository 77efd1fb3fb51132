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

#include "prelim/secauth/bytes.hpp"

#include "prelim/core/errors.hpp"

#include <sodium.h>

#include <mutex>

namespace prelim::secauth {

void ensure_sodium()
{
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0)
    {
      throw std::runtime_error{"libsodium failed to initialize"};
    }
  });
}

std::string to_hex(std::span<std::uint8_t const> bytes)
{
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes)
  {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xf];
  }
  return out;
}

// Lowercase only, so every byte string has exactly one spelling.
Bytes from_hex(std::string_view hex)
{
  if (hex.size() % 2 != 0)
  {
    throw EncodingError{"hex string of odd length"};
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9')
    {
      return c - '0';
    }
    if (c >= 'a' && c <= 'f')
    {
      return c - 'a' + 10;
    }
    throw EncodingError{"not a lowercase hex digit"};
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
  {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return out;
}

Bytes as_bytes(std::string_view text)
{
  return Bytes(text.begin(), text.end());
}

Bytes sha256(std::span<std::uint8_t const> data)
{
  ensure_sodium();
  Bytes out(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

}  // namespace prelim::secauth

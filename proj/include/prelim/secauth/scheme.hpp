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

#include "prelim/secauth/bytes.hpp"

#include <array>
#include <string_view>

namespace prelim::secauth {

struct KeyMaterial
{
  Bytes secret;
  Bytes public_key;
};

/// Pluggable asymmetric signature provider.
class SignatureScheme
{
public:
  virtual ~SignatureScheme() = default;

  virtual std::string_view name() const noexcept = 0;

  /// Deterministic key pair from 32 bytes of seed material.
  virtual KeyMaterial derive(std::array<std::uint8_t, 32> const &seed) const = 0;

  virtual Bytes sign(Bytes const &secret, std::span<std::uint8_t const> message) const = 0;

  virtual bool verify(std::span<std::uint8_t const> public_key,
                      std::span<std::uint8_t const> message,
                      std::span<std::uint8_t const> signature) const = 0;
};

/// Ed25519 (libsodium). The default.
SignatureScheme const &ed25519();

/// Schnorr signatures in the multiplicative group modulo 2^61 - 1 with
/// deterministic nonces. Far too small for real use; it exists so test
/// goldens do not depend on an external library's encoding.
SignatureScheme const &schnorr_test();

/// nullptr when unknown.
SignatureScheme const *scheme_by_name(std::string_view name) noexcept;

}  // namespace prelim::secauth

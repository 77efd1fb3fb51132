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
#include "prelim/secauth/scheme.hpp"

#include <cstdint>
#include <memory>

namespace prelim::secauth {

/// Signing capability of one jurisdiction, modelled on a smartcard: it can
/// sign, but nothing in its interface hands out the private key.
class KeyHandle
{
public:
  /// Fresh random key.
  static KeyHandle generate(core::JurisdictionId subject, SignatureScheme const &scheme);

  /// Key derived from (seed, subject); equal inputs give equal keys.
  static KeyHandle derive(core::JurisdictionId subject, SignatureScheme const &scheme,
                          std::uint64_t seed);

  core::JurisdictionId const &subject() const noexcept
  {
    return subject_;
  }
  Bytes const &public_key() const noexcept
  {
    return public_key_;
  }
  SignatureScheme const &scheme() const noexcept
  {
    return *scheme_;
  }

  Bytes sign(std::span<std::uint8_t const> message) const;

private:
  class Custody;

  KeyHandle(core::JurisdictionId subject, SignatureScheme const &scheme, KeyMaterial material);

  core::JurisdictionId           subject_;
  SignatureScheme const         *scheme_;
  Bytes                          public_key_;
  std::shared_ptr<Custody const> custody_;
};

}  // namespace prelim::secauth

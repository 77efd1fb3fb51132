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

#include "prelim/secauth/keys.hpp"

#include <sodium.h>

#include <algorithm>

namespace prelim::secauth {

class KeyHandle::Custody
{
public:
  explicit Custody(Bytes secret)
    : secret_{std::move(secret)}
  {}

  Custody(Custody const &)            = delete;
  Custody &operator=(Custody const &) = delete;

  ~Custody()
  {
    sodium_memzero(secret_.data(), secret_.size());
  }

  Bytes const &secret() const noexcept
  {
    return secret_;
  }

private:
  Bytes secret_;
};

KeyHandle::KeyHandle(core::JurisdictionId subject, SignatureScheme const &scheme,
                     KeyMaterial material)
  : subject_{std::move(subject)}
  , scheme_{&scheme}
  , public_key_{std::move(material.public_key)}
  , custody_{std::make_shared<Custody const>(std::move(material.secret))}
{}

KeyHandle KeyHandle::generate(core::JurisdictionId subject, SignatureScheme const &scheme)
{
  ensure_sodium();
  std::array<std::uint8_t, 32> seed{};
  randombytes_buf(seed.data(), seed.size());
  auto material = scheme.derive(seed);
  sodium_memzero(seed.data(), seed.size());
  return KeyHandle{std::move(subject), scheme, std::move(material)};
}

KeyHandle KeyHandle::derive(core::JurisdictionId subject, SignatureScheme const &scheme,
                            std::uint64_t seed)
{
  auto const digest = sha256(
      as_bytes("prelimsim-key-v1\n" + std::to_string(seed) + "\n" + subject.str()));
  std::array<std::uint8_t, 32> bytes{};
  std::copy_n(digest.begin(), bytes.size(), bytes.begin());
  return KeyHandle{std::move(subject), scheme, scheme.derive(bytes)};
}

Bytes KeyHandle::sign(std::span<std::uint8_t const> message) const
{
  return scheme_->sign(custody_->secret(), message);
}

}  // namespace prelim::secauth

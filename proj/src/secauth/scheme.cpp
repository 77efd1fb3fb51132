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

#include "prelim/secauth/scheme.hpp"

#include <sodium.h>

#include <stdexcept>

namespace prelim::secauth {
namespace {

class Ed25519 final : public SignatureScheme
{
public:
  std::string_view name() const noexcept override
  {
    return "ed25519";
  }

  KeyMaterial derive(std::array<std::uint8_t, 32> const &seed) const override
  {
    ensure_sodium();
    KeyMaterial m;
    m.secret.resize(crypto_sign_SECRETKEYBYTES);
    m.public_key.resize(crypto_sign_PUBLICKEYBYTES);
    crypto_sign_seed_keypair(m.public_key.data(), m.secret.data(), seed.data());
    return m;
  }

  Bytes sign(Bytes const &secret, std::span<std::uint8_t const> message) const override
  {
    ensure_sodium();
    if (secret.size() != crypto_sign_SECRETKEYBYTES)
    {
      throw std::invalid_argument{"ed25519: bad secret key size"};
    }
    Bytes sig(crypto_sign_BYTES);
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), secret.data());
    return sig;
  }

  bool verify(std::span<std::uint8_t const> public_key, std::span<std::uint8_t const> message,
              std::span<std::uint8_t const> signature) const override
  {
    ensure_sodium();
    if (public_key.size() != crypto_sign_PUBLICKEYBYTES || signature.size() != crypto_sign_BYTES)
    {
      return false;
    }
    return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                       public_key.data()) == 0;
  }
};

// Schnorr over the multiplicative group of GF(p), p = 2^61 - 1.
class SchnorrTest final : public SignatureScheme
{
  using u64  = std::uint64_t;
  __extension__ typedef unsigned __int128 u128;

  static constexpr u64 kP = (u64{1} << 61) - 1;
  static constexpr u64 kQ = kP - 1;  // exponents live modulo the group order
  static constexpr u64 kG = 37;

  static u64 mulmod(u64 a, u64 b, u64 m)
  {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
  }

  static u64 powmod(u64 base, u64 exp)
  {
    u64 result = 1;
    base %= kP;
    while (exp)
    {
      if (exp & 1)
      {
        result = mulmod(result, base, kP);
      }
      base = mulmod(base, base, kP);
      exp >>= 1;
    }
    return result;
  }

  static void put(Bytes &out, u64 v)
  {
    for (int i = 7; i >= 0; --i)
    {
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  static u64 get(std::span<std::uint8_t const> in)
  {
    u64 v = 0;
    for (std::size_t i = 0; i < 8; ++i)
    {
      v = v << 8 | in[i];
    }
    return v;
  }

  static u64 hash(u64 a, std::span<std::uint8_t const> message)
  {
    Bytes buf;
    buf.reserve(8 + message.size());
    put(buf, a);
    buf.insert(buf.end(), message.begin(), message.end());
    return get(sha256(buf)) % kQ;
  }

public:
  std::string_view name() const noexcept override
  {
    return "schnorr-test";
  }

  KeyMaterial derive(std::array<std::uint8_t, 32> const &seed) const override
  {
    auto const x = get(sha256(seed)) % (kQ - 1) + 1;
    KeyMaterial m;
    put(m.secret, x);
    put(m.public_key, powmod(kG, x));
    return m;
  }

  Bytes sign(Bytes const &secret, std::span<std::uint8_t const> message) const override
  {
    if (secret.size() != 8)
    {
      throw std::invalid_argument{"schnorr-test: bad secret key size"};
    }
    auto const x = get(secret);
    auto       k = hash(x, message);
    if (k == 0)
    {
      k = 1;
    }
    auto const e = hash(powmod(kG, k), message);
    auto const s = (k + mulmod(x, e, kQ)) % kQ;
    Bytes sig;
    put(sig, e);
    put(sig, s);
    return sig;
  }

  bool verify(std::span<std::uint8_t const> public_key, std::span<std::uint8_t const> message,
              std::span<std::uint8_t const> signature) const override
  {
    if (public_key.size() != 8 || signature.size() != 16)
    {
      return false;
    }
    auto const y = get(public_key);
    auto const e = get(signature.first(8));
    auto const s = get(signature.subspan(8));
    if (y == 0 || y >= kP || e >= kQ || s >= kQ)
    {
      return false;
    }
    auto const r = mulmod(powmod(kG, s), powmod(y, kQ - e), kP);
    return hash(r, message) == e;
  }
};

}  // namespace

SignatureScheme const &ed25519()
{
  static Ed25519 const scheme;
  return scheme;
}

SignatureScheme const &schnorr_test()
{
  static SchnorrTest const scheme;
  return scheme;
}

SignatureScheme const *scheme_by_name(std::string_view name) noexcept
{
  if (name == ed25519().name())
  {
    return &ed25519();
  }
  if (name == schnorr_test().name())
  {
    return &schnorr_test();
  }
  return nullptr;
}

}  // namespace prelim::secauth

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
#include "prelim/secauth/bytes.hpp"
#include "prelim/secauth/keys.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace prelim::secauth {

struct Certificate
{
  core::JurisdictionId subject;
  core::JurisdictionId issuer;
  std::uint64_t        serial = 0;
  std::string          scheme;
  Bytes                public_key;
  Bytes                issuer_signature;

  bool is_self_signed() const
  {
    return subject == issuer;
  }

  friend bool operator==(Certificate const &, Certificate const &) = default;
};

/// Bytes covered by issuer_signature: "subject=", "issuer=", "serial=",
/// "scheme=", "public_key=<hex>" lines, each ending in '\n'.
Bytes to_be_signed(Certificate const &cert);

/// Self-signed root certificate of the key's subject.
Certificate make_root_certificate(KeyHandle const &root_key, std::uint64_t serial);

/// Certificate for a direct child of the issuer. Throws HierarchyError when
/// `subject` is not a child of issuer_cert.subject and SubjectMismatch when
/// the key does not belong to issuer_cert.
Certificate issue_certificate(KeyHandle const &issuer_key, Certificate const &issuer_cert,
                              core::JurisdictionId const &subject, Bytes const &subject_public_key,
                              std::uint64_t serial);

/// Whether `cert`'s issuer_signature verifies under `issuer`'s key.
bool signed_by(Certificate const &cert, Certificate const &issuer);

/// Text form: "certificate v1" then field=value lines (hex for bytes), then "end".
void        write_certificate(std::ostream &os, Certificate const &cert);
std::string to_text(Certificate const &cert);

/// Throws EncodingError on malformed input.
Certificate parse_certificate(std::string_view text);

}  // namespace prelim::secauth

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

#include "prelim/secauth/certificate.hpp"

#include <filesystem>
#include <map>
#include <vector>

namespace prelim::secauth {

/// Directory of certificates, one per file. The root is pinned as
/// "root.cert"; every other file is "<path with '/' replaced by '.'>.cert".
struct TrustStore
{
  Certificate                                 root;
  std::map<core::JurisdictionId, Certificate> certificates;  // excludes the root

  std::vector<Certificate> chain_for(core::JurisdictionId const &subject) const;
};

std::filesystem::path certificate_file_name(core::JurisdictionId const &subject);

/// Writes every certificate. Throws std::filesystem::filesystem_error or
/// std::runtime_error on I/O failure.
void write_trust_store(std::filesystem::path const &dir, Certificate const &root,
                       std::map<core::JurisdictionId, Certificate> const &certificates);

/// Throws EncodingError on malformed files, ProvisioningError if root.cert is
/// missing or not self-signed.
TrustStore load_trust_store(std::filesystem::path const &dir);

}  // namespace prelim::secauth

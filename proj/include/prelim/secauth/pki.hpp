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
#include "prelim/secauth/keys.hpp"
#include "prelim/simnet/channel.hpp"

#include <map>
#include <optional>
#include <vector>

namespace prelim::secauth {

/// Certificate hierarchy mirroring a jurisdiction tree: the root signs its
/// children, who sign theirs. Serials follow tree pre-order from 1.
struct Pki
{
  Certificate                                  root;
  std::map<core::JurisdictionId, Certificate>  certificates;  // includes the root
  std::map<core::JurisdictionId, KeyHandle>    keys;

  /// Chain for `subject` from its own certificate up to, excluding, the root.
  /// Throws ProvisioningError for unknown subjects.
  std::vector<Certificate> chain_for(core::JurisdictionId const &subject) const;

  bool has_certificate(core::JurisdictionId const &subject) const
  {
    return certificates.contains(subject);
  }
};

/// Issues keys and certificates for every node. With a seed, keys are derived
/// deterministically; otherwise they are random.
Pki bootstrap_pki(core::JurisdictionTree const &tree, SignatureScheme const &scheme,
                  std::optional<std::uint64_t> seed = std::nullopt);

/// Channel carrying signed reports: integrity and authenticity hold, while
/// delay stays exactly as possible as before. Throws ProvisioningError unless
/// both endpoints hold a certificate.
simnet::ChannelSpec wrap_channel(simnet::ChannelSpec const &channel, Pki const &pki,
                                 simnet::Edge const &edge);

}  // namespace prelim::secauth

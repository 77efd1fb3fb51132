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

#include "prelim/secauth/pki.hpp"

#include "prelim/core/errors.hpp"

namespace prelim::secauth {

std::vector<Certificate> Pki::chain_for(core::JurisdictionId const &subject) const
{
  std::vector<Certificate> chain;
  auto                     current = subject;
  while (current != root.subject)
  {
    auto it = certificates.find(current);
    if (it == certificates.end())
    {
      throw ProvisioningError{"no certificate for " + current.str()};
    }
    chain.push_back(it->second);
    current = it->second.issuer;
  }
  return chain;
}

Pki bootstrap_pki(core::JurisdictionTree const &tree, SignatureScheme const &scheme,
                  std::optional<std::uint64_t> seed)
{
  Pki           pki;
  std::uint64_t serial = 1;
  for (auto const &id : tree.nodes())
  {
    auto key = seed ? KeyHandle::derive(id, scheme, *seed) : KeyHandle::generate(id, scheme);
    if (id == tree.root())
    {
      pki.root = make_root_certificate(key, serial++);
      pki.certificates.emplace(id, pki.root);
    }
    else
    {
      auto const  parent = *tree.parent(id);
      auto const &issuer = pki.certificates.at(parent);
      pki.certificates.emplace(
          id, issue_certificate(pki.keys.at(parent), issuer, id, key.public_key(), serial++));
    }
    pki.keys.emplace(id, std::move(key));
  }
  return pki;
}

simnet::ChannelSpec wrap_channel(simnet::ChannelSpec const &channel, Pki const &pki,
                                 simnet::Edge const &edge)
{
  for (auto const *end : {&edge.sender, &edge.receiver})
  {
    if (!pki.has_certificate(*end))
    {
      throw ProvisioningError{"no certificate for " + end->str() + " on " + edge.str()};
    }
  }
  auto out           = channel;
  out.integrity      = true;
  out.authenticity   = true;
  out.signed_reports = true;
  return out;
}

}  // namespace prelim::secauth

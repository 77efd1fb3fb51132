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
#include "prelim/secauth/revocation.hpp"
#include "prelim/simnet/report.hpp"

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace prelim::secauth {

/// Deterministic, injective encoding of a report:
///
///   election=<id>\n sender=<a/b/c>\n seq=<n>\n kind=<Preliminary|Final>\n
///   yes=<n>\n no=<n>\n blank=<n>\n invalid=<n>\n
///
/// Throws EncodingError if the election id or a sender segment contains a
/// line feed or '='.
Bytes canonical_encode(simnet::Report const &report);

struct SignedReport
{
  simnet::Report report;
  Bytes          signature;
  /// Signer's certificate first, up to but excluding the root.
  std::vector<Certificate> certificate_chain;

  friend bool operator==(SignedReport const &, SignedReport const &) = default;
};

/// Throws SubjectMismatch unless key, report sender and chain head agree.
SignedReport sign_report(KeyHandle const &key, std::vector<Certificate> const &chain,
                         simnet::Report const &report);

/// Last accepted sequence number per (sender, election). Thread-safe: of any
/// number of concurrent advances to the same number at most one succeeds.
class SequenceState
{
public:
  bool try_advance(core::JurisdictionId const &sender, std::string const &election,
                   std::uint64_t sequence_no);

  std::uint64_t last(core::JurisdictionId const &sender, std::string const &election) const;

private:
  mutable std::mutex                                                      mutex_;
  std::map<std::pair<core::JurisdictionId, std::string>, std::uint64_t> last_;
};

enum class RejectReason
{
  MalformedChain,     // wrong length, or links do not follow the hierarchy
  UntrustedRoot,      // chain does not end at the trusted root
  BadChainSignature,  // a certificate's issuer signature fails
  Revoked,            // a serial in the chain is revoked
  SubjectMismatch,    // chain head is not the report's sender
  BadSignature,       // report signature fails
  WrongElection,      // report belongs to another election
  Replay              // sequence number not fresh
};

char const *to_string(RejectReason r) noexcept;

struct Accept
{
};

struct Reject
{
  RejectReason reason;
};

using Verdict = std::variant<Accept, Reject>;

inline bool accepted(Verdict const &v)
{
  return std::holds_alternative<Accept>(v);
}

/// Chain checks alone: structure, anchoring at `trusted_root`, link
/// signatures and revocation. nullopt when the chain is good for `subject`.
std::optional<RejectReason> verify_chain(core::JurisdictionId const     &subject,
                                         std::vector<Certificate> const &chain,
                                         Certificate const &trusted_root, RevocationList const &crl);

/// Full verification. On Accept the sequence state advances.
Verdict verify_report(SignedReport const &sr, Certificate const &trusted_root,
                      RevocationList const &crl, SequenceState &seq_state,
                      std::string_view expected_election);

/// Every check except sequence freshness; leaves no state behind. Used for
/// relayed child reports, which are legitimately seen more than once.
Verdict verify_authenticity(SignedReport const &sr, Certificate const &trusted_root,
                            RevocationList const &crl, std::string_view expected_election);

/// Text form of the signed content: "signed-report v1", the canonical lines,
/// "signature=<hex>", "chain=<n>", n certificates, "end". emitted_at is not
/// signed and not serialized; parsing yields emitted_at = 0.
void         write_signed_report(std::ostream &os, SignedReport const &sr);
std::string  to_text(SignedReport const &sr);
/// Throws EncodingError on anything but the exact layout.
SignedReport parse_signed_report(std::string_view text);

}  // namespace prelim::secauth

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

#include "prelim/secauth/signed_report.hpp"

#include "prelim/core/errors.hpp"
#include "text_fields.hpp"

#include <ostream>
#include <sstream>

namespace prelim::secauth {
namespace {

void check_text(std::string_view what, std::string_view s)
{
  if (s.find('\n') != std::string_view::npos || s.find('=') != std::string_view::npos)
  {
    throw EncodingError{std::string{what} + " contains a line feed or '='"};
  }
}

std::string canonical_text(simnet::Report const &r)
{
  check_text("election id", r.election_id);
  for (auto const &segment : r.sender.segments())
  {
    check_text("sender segment", segment);
  }
  std::string s;
  s += "election=" + r.election_id + "\n";
  s += "sender=" + r.sender.str() + "\n";
  s += "seq=" + std::to_string(r.sequence_no) + "\n";
  s += std::string{"kind="} + simnet::to_string(r.kind) + "\n";
  s += "yes=" + std::to_string(r.counts.yes) + "\n";
  s += "no=" + std::to_string(r.counts.no) + "\n";
  s += "blank=" + std::to_string(r.counts.blank) + "\n";
  s += "invalid=" + std::to_string(r.counts.invalid) + "\n";
  return s;
}

}  // namespace

Bytes canonical_encode(simnet::Report const &report)
{
  return as_bytes(canonical_text(report));
}

SignedReport sign_report(KeyHandle const &key, std::vector<Certificate> const &chain,
                         simnet::Report const &report)
{
  if (key.subject() != report.sender)
  {
    throw SubjectMismatch{"key of " + key.subject().str() + " cannot sign for " +
                          report.sender.str()};
  }
  if (chain.empty() || chain.front().subject != report.sender)
  {
    throw SubjectMismatch{"certificate chain does not start at " + report.sender.str()};
  }
  if (chain.front().public_key != key.public_key())
  {
    throw SubjectMismatch{"certificate of " + report.sender.str() + " holds another key"};
  }
  return SignedReport{report, key.sign(canonical_encode(report)), chain};
}

bool SequenceState::try_advance(core::JurisdictionId const &sender, std::string const &election,
                                std::uint64_t sequence_no)
{
  std::lock_guard lock{mutex_};
  auto &last = last_[{sender, election}];
  if (sequence_no <= last)
  {
    return false;
  }
  last = sequence_no;
  return true;
}

std::uint64_t SequenceState::last(core::JurisdictionId const &sender,
                                  std::string const          &election) const
{
  std::lock_guard lock{mutex_};
  auto it = last_.find({sender, election});
  return it == last_.end() ? 0 : it->second;
}

char const *to_string(RejectReason r) noexcept
{
  switch (r)
  {
  case RejectReason::MalformedChain:
    return "MalformedChain";
  case RejectReason::UntrustedRoot:
    return "UntrustedRoot";
  case RejectReason::BadChainSignature:
    return "BadChainSignature";
  case RejectReason::Revoked:
    return "Revoked";
  case RejectReason::SubjectMismatch:
    return "SubjectMismatch";
  case RejectReason::BadSignature:
    return "BadSignature";
  case RejectReason::WrongElection:
    return "WrongElection";
  case RejectReason::Replay:
    return "Replay";
  }
  return "?";
}

std::optional<RejectReason> verify_chain(core::JurisdictionId const     &subject,
                                         std::vector<Certificate> const &chain,
                                         Certificate const &trusted_root, RevocationList const &crl)
{
  if (chain.empty())
  {
    return RejectReason::MalformedChain;
  }
  if (chain.front().subject != subject)
  {
    return RejectReason::SubjectMismatch;
  }
  if (chain.size() != subject.depth())
  {
    return RejectReason::MalformedChain;
  }
  for (std::size_t i = 0; i < chain.size(); ++i)
  {
    auto const &c = chain[i];
    if (c.is_self_signed() || !c.issuer.is_parent_of(c.subject))
    {
      return RejectReason::MalformedChain;
    }
    if (i + 1 < chain.size() && chain[i + 1].subject != c.issuer)
    {
      return RejectReason::MalformedChain;
    }
  }
  if (chain.back().issuer != trusted_root.subject || !signed_by(chain.back(), trusted_root))
  {
    return RejectReason::UntrustedRoot;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
  {
    if (!signed_by(chain[i], chain[i + 1]))
    {
      return RejectReason::BadChainSignature;
    }
  }
  if (crl.contains(trusted_root.serial))
  {
    return RejectReason::Revoked;
  }
  for (auto const &c : chain)
  {
    if (crl.contains(c.serial))
    {
      return RejectReason::Revoked;
    }
  }
  return std::nullopt;
}

Verdict verify_authenticity(SignedReport const &sr, Certificate const &trusted_root,
                            RevocationList const &crl, std::string_view expected_election)
{
  if (auto reason = verify_chain(sr.report.sender, sr.certificate_chain, trusted_root, crl))
  {
    return Reject{*reason};
  }
  auto const &head   = sr.certificate_chain.front();
  auto const *scheme = scheme_by_name(head.scheme);
  if (!scheme)
  {
    return Reject{RejectReason::BadSignature};
  }
  Bytes message;
  try
  {
    message = canonical_encode(sr.report);
  }
  catch (EncodingError const &)
  {
    return Reject{RejectReason::BadSignature};
  }
  if (!scheme->verify(head.public_key, message, sr.signature))
  {
    return Reject{RejectReason::BadSignature};
  }
  if (sr.report.election_id != expected_election)
  {
    return Reject{RejectReason::WrongElection};
  }
  return Accept{};
}

Verdict verify_report(SignedReport const &sr, Certificate const &trusted_root,
                      RevocationList const &crl, SequenceState &seq_state,
                      std::string_view expected_election)
{
  auto v = verify_authenticity(sr, trusted_root, crl, expected_election);
  if (!accepted(v))
  {
    return v;
  }
  if (!seq_state.try_advance(sr.report.sender, sr.report.election_id, sr.report.sequence_no))
  {
    return Reject{RejectReason::Replay};
  }
  return Accept{};
}

void write_signed_report(std::ostream &os, SignedReport const &sr)
{
  os << "signed-report v1\n" << canonical_text(sr.report);
  os << "signature=" << to_hex(sr.signature) << '\n';
  os << "chain=" << sr.certificate_chain.size() << '\n';
  for (auto const &c : sr.certificate_chain)
  {
    write_certificate(os, c);
  }
  os << "end\n";
}

std::string to_text(SignedReport const &sr)
{
  std::ostringstream os;
  write_signed_report(os, sr);
  return os.str();
}

SignedReport parse_signed_report(std::string_view text)
{
  LineReader   in{text};
  SignedReport sr;
  in.expect_line("signed-report v1");
  auto &r         = sr.report;
  r.election_id   = std::string{in.field("election")};
  r.sender        = in.path("sender");
  r.sequence_no   = in.number("seq");
  auto const kind = simnet::parse_report_kind(in.field("kind"));
  if (!kind)
  {
    throw EncodingError{"unknown report kind"};
  }
  r.kind            = *kind;
  r.counts.yes      = in.number("yes");
  r.counts.no       = in.number("no");
  r.counts.blank    = in.number("blank");
  r.counts.invalid  = in.number("invalid");
  sr.signature      = from_hex(in.field("signature"));
  auto const length = in.number("chain");
  if (length > 64)
  {
    throw EncodingError{"certificate chain too long"};
  }
  for (std::uint64_t i = 0; i < length; ++i)
  {
    sr.certificate_chain.push_back(read_certificate(in));
  }
  in.expect_line("end");
  in.expect_done();
  // Throws on ids the canonical form forbids.
  canonical_encode(r);
  return sr;
}

}  // namespace prelim::secauth

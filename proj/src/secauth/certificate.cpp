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

#include "prelim/secauth/certificate.hpp"

#include "prelim/core/errors.hpp"
#include "text_fields.hpp"

#include <ostream>
#include <sstream>

namespace prelim::secauth {

Bytes to_be_signed(Certificate const &cert)
{
  std::string s;
  s += "subject=" + cert.subject.str() + "\n";
  s += "issuer=" + cert.issuer.str() + "\n";
  s += "serial=" + std::to_string(cert.serial) + "\n";
  s += "scheme=" + cert.scheme + "\n";
  s += "public_key=" + to_hex(cert.public_key) + "\n";
  return as_bytes(s);
}

Certificate make_root_certificate(KeyHandle const &root_key, std::uint64_t serial)
{
  Certificate c;
  c.subject          = root_key.subject();
  c.issuer           = root_key.subject();
  c.serial           = serial;
  c.scheme           = std::string{root_key.scheme().name()};
  c.public_key       = root_key.public_key();
  c.issuer_signature = root_key.sign(to_be_signed(c));
  return c;
}

Certificate issue_certificate(KeyHandle const &issuer_key, Certificate const &issuer_cert,
                              core::JurisdictionId const &subject, Bytes const &subject_public_key,
                              std::uint64_t serial)
{
  if (issuer_key.subject() != issuer_cert.subject ||
      issuer_key.public_key() != issuer_cert.public_key)
  {
    throw SubjectMismatch{"issuer key does not belong to the certificate of " +
                          issuer_cert.subject.str()};
  }
  if (!issuer_cert.subject.is_parent_of(subject))
  {
    throw HierarchyError{issuer_cert.subject.str() + " may not certify " + subject.str()};
  }
  Certificate c;
  c.subject          = subject;
  c.issuer           = issuer_cert.subject;
  c.serial           = serial;
  c.scheme           = std::string{issuer_key.scheme().name()};
  c.public_key       = subject_public_key;
  c.issuer_signature = issuer_key.sign(to_be_signed(c));
  return c;
}

bool signed_by(Certificate const &cert, Certificate const &issuer)
{
  if (cert.issuer != issuer.subject)
  {
    return false;
  }
  auto const *scheme = scheme_by_name(issuer.scheme);
  if (!scheme)
  {
    return false;
  }
  return scheme->verify(issuer.public_key, to_be_signed(cert), cert.issuer_signature);
}

void write_certificate(std::ostream &os, Certificate const &cert)
{
  os << "certificate v1\n";
  os << "subject=" << cert.subject.str() << '\n';
  os << "issuer=" << cert.issuer.str() << '\n';
  os << "serial=" << cert.serial << '\n';
  os << "scheme=" << cert.scheme << '\n';
  os << "public_key=" << to_hex(cert.public_key) << '\n';
  os << "issuer_signature=" << to_hex(cert.issuer_signature) << '\n';
  os << "end\n";
}

std::string to_text(Certificate const &cert)
{
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

Certificate read_certificate(LineReader &in)
{
  in.expect_line("certificate v1");
  Certificate c;
  c.subject          = in.path("subject");
  c.issuer           = in.path("issuer");
  c.serial           = in.number("serial");
  c.scheme           = std::string{in.field("scheme")};
  c.public_key       = from_hex(in.field("public_key"));
  c.issuer_signature = from_hex(in.field("issuer_signature"));
  in.expect_line("end");
  return c;
}

Certificate parse_certificate(std::string_view text)
{
  LineReader in{text};
  auto       c = read_certificate(in);
  in.expect_done();
  return c;
}

}  // namespace prelim::secauth

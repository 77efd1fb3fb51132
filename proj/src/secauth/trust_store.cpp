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

#include "prelim/secauth/trust_store.hpp"

#include "prelim/core/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace prelim::secauth {
namespace {

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in)
  {
    throw std::runtime_error{"cannot read " + path.string()};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(std::filesystem::path const &path, std::string const &text)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out)
  {
    throw std::runtime_error{"cannot write " + path.string()};
  }
  out << text;
  out.flush();
  if (!out)
  {
    throw std::runtime_error{"write failed: " + path.string()};
  }
}

}  // namespace

std::vector<Certificate> TrustStore::chain_for(core::JurisdictionId const &subject) const
{
  std::vector<Certificate> chain;
  auto                     current = subject;
  while (current != root.subject)
  {
    auto it = certificates.find(current);
    if (it == certificates.end())
    {
      throw ProvisioningError{"trust store has no certificate for " + current.str()};
    }
    chain.push_back(it->second);
    current = it->second.issuer;
  }
  return chain;
}

std::filesystem::path certificate_file_name(core::JurisdictionId const &subject)
{
  if (subject.depth() == 0)
  {
    return "root.cert";
  }
  auto name = subject.str();
  for (auto &c : name)
  {
    if (c == '/')
    {
      c = '.';
    }
  }
  return name + ".cert";
}

void write_trust_store(std::filesystem::path const &dir, Certificate const &root,
                       std::map<core::JurisdictionId, Certificate> const &certificates)
{
  std::filesystem::create_directories(dir);
  write_file(dir / "root.cert", to_text(root));
  for (auto const &[subject, cert] : certificates)
  {
    if (subject == root.subject)
    {
      continue;
    }
    write_file(dir / certificate_file_name(subject), to_text(cert));
  }
}

TrustStore load_trust_store(std::filesystem::path const &dir)
{
  auto const root_path = dir / "root.cert";
  if (!std::filesystem::exists(root_path))
  {
    throw ProvisioningError{"trust store " + dir.string() + " has no root.cert"};
  }
  TrustStore store;
  store.root = parse_certificate(read_file(root_path));
  if (!store.root.is_self_signed() || !signed_by(store.root, store.root))
  {
    throw ProvisioningError{"root.cert is not a valid self-signed certificate"};
  }

  std::vector<std::filesystem::path> files;
  for (auto const &entry : std::filesystem::directory_iterator{dir})
  {
    if (entry.is_regular_file() && entry.path().extension() == ".cert" &&
        entry.path().filename() != "root.cert")
    {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (auto const &path : files)
  {
    auto cert = parse_certificate(read_file(path));
    if (certificate_file_name(cert.subject) != path.filename())
    {
      throw EncodingError{path.filename().string() + " holds the certificate of " +
                          cert.subject.str()};
    }
    store.certificates.emplace(cert.subject, std::move(cert));
  }
  return store;
}

}  // namespace prelim::secauth

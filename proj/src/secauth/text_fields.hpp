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

#include "prelim/core/errors.hpp"
#include "prelim/core/jurisdiction.hpp"
#include "prelim/secauth/certificate.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prelim::secauth {

// Strict reader for the line-oriented text forms: every line ends in '\n',
// fields appear in a fixed order, numbers are plain decimal without leading
// zeros. Anything else throws EncodingError.
class LineReader
{
public:
  explicit LineReader(std::string_view text)
    : text_{text}
  {}

  std::string_view line()
  {
    auto const end = text_.find('\n', pos_);
    if (end == std::string_view::npos)
    {
      throw EncodingError{"truncated input"};
    }
    auto l = text_.substr(pos_, end - pos_);
    pos_   = end + 1;
    return l;
  }

  void expect_line(std::string_view want)
  {
    if (line() != want)
    {
      throw EncodingError{"expected '" + std::string{want} + "'"};
    }
  }

  std::string_view field(std::string_view key)
  {
    auto const l = line();
    if (l.size() <= key.size() || l.substr(0, key.size()) != key || l[key.size()] != '=')
    {
      throw EncodingError{"expected field '" + std::string{key} + "'"};
    }
    return l.substr(key.size() + 1);
  }

  std::uint64_t number(std::string_view key)
  {
    auto const v = field(key);
    if (v.empty() || (v.size() > 1 && v.front() == '0'))
    {
      throw EncodingError{"malformed number in '" + std::string{key} + "'"};
    }
    std::uint64_t n   = 0;
    auto          res = std::from_chars(v.data(), v.data() + v.size(), n);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    {
      throw EncodingError{"malformed number in '" + std::string{key} + "'"};
    }
    return n;
  }

  core::JurisdictionId path(std::string_view key)
  {
    auto const v = field(key);
    try
    {
      return core::JurisdictionId::parse(v);
    }
    catch (std::invalid_argument const &e)
    {
      throw EncodingError{std::string{"bad path in '"} + std::string{key} + "': " + e.what()};
    }
  }

  void expect_done() const
  {
    if (pos_ != text_.size())
    {
      throw EncodingError{"trailing data"};
    }
  }

private:
  std::string_view text_;
  std::size_t      pos_ = 0;
};

Certificate read_certificate(LineReader &in);

}  // namespace prelim::secauth

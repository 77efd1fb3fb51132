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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prelim {

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public Error
{
public:
  using Error::Error;
};

class MissingCanton : public Error
{
public:
  using Error::Error;
};

class UnknownCanton : public Error
{
public:
  using Error::Error;
};

class Infeasible : public Error
{
public:
  using Error::Error;
};

class HierarchyError : public Error
{
public:
  using Error::Error;
};

// Scenario or tree file problem; carries the source location when known.
class ConfigError : public Error
{
public:
  ConfigError(std::string const &message, std::string source = {}, std::size_t line = 0)
    : Error{format_message(message, source, line)}
    , source_{std::move(source)}
    , line_{line}
  {}

  std::string const &source() const noexcept
  {
    return source_;
  }
  std::size_t line() const noexcept
  {
    return line_;
  }

private:
  static std::string format_message(std::string const &message, std::string const &source,
                            std::size_t line)
  {
    if (source.empty())
    {
      return message;
    }
    if (line == 0)
    {
      return source + ": " + message;
    }
    return source + ":" + std::to_string(line) + ": " + message;
  }

  std::string source_;
  std::size_t line_;
};

// An attack was requested on a channel whose capability flags forbid it.
class CapabilityError : public Error
{
public:
  using Error::Error;
};

class DuplicateFinal : public Error
{
public:
  using Error::Error;
};

class EncodingError : public Error
{
public:
  using Error::Error;
};

class SubjectMismatch : public Error
{
public:
  using Error::Error;
};

class ProvisioningError : public Error
{
public:
  using Error::Error;
};

// Malformed input row; row numbers are 1-based and count the header line.
class ParseError : public Error
{
public:
  ParseError(std::string const &message, std::size_t row)
    : Error{"row " + std::to_string(row) + ": " + message}
    , row_{row}
  {}

  std::size_t row() const noexcept
  {
    return row_;
  }

private:
  std::size_t row_;
};

class DuplicateRecord : public Error
{
public:
  using Error::Error;
};

}  // namespace prelim

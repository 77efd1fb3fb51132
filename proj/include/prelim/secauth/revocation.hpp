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

#include <cstdint>
#include <mutex>
#include <set>

namespace prelim::secauth {

/// Versioned full list of revoked certificate serials. Serials are only ever
/// added; every revoke bumps the version.
class RevocationList
{
public:
  void revoke(std::uint64_t serial);

  bool contains(std::uint64_t serial) const
  {
    return revoked_.contains(serial);
  }
  std::uint64_t version() const noexcept
  {
    return version_;
  }
  std::set<std::uint64_t> const &revoked() const noexcept
  {
    return revoked_;
  }

private:
  std::set<std::uint64_t> revoked_;
  std::uint64_t           version_ = 0;
};

/// A verifier's view of the revocation list. Lists may arrive in any order;
/// an older version never replaces a newer one.
class RevocationState
{
public:
  /// Returns whether the list was newer and got installed. A list missing an
  /// already revoked serial is refused.
  bool update(RevocationList const &list);

  RevocationList current() const;

private:
  mutable std::mutex mutex_;
  RevocationList     current_;
};

}  // namespace prelim::secauth

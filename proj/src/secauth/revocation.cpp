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

#include "prelim/secauth/revocation.hpp"

namespace prelim::secauth {

void RevocationList::revoke(std::uint64_t serial)
{
  revoked_.insert(serial);
  ++version_;
}

bool RevocationState::update(RevocationList const &list)
{
  std::lock_guard lock{mutex_};
  if (list.version() <= current_.version())
  {
    return false;
  }
  // A list that forgets a serial is not a successor, whatever its version.
  for (auto serial : current_.revoked())
  {
    if (!list.contains(serial))
    {
      return false;
    }
  }
  current_ = list;
  return true;
}

RevocationList RevocationState::current() const
{
  std::lock_guard lock{mutex_};
  return current_;
}

}  // namespace prelim::secauth

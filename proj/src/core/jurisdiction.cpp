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

#include "prelim/core/jurisdiction.hpp"

#include "prelim/core/errors.hpp"

#include <stdexcept>

namespace prelim::core {

JurisdictionId::JurisdictionId(std::vector<std::string> segments)
  : segments_{std::move(segments)}
{
  if (segments_.empty())
  {
    throw std::invalid_argument{"jurisdiction path is empty"};
  }
  for (auto const &s : segments_)
  {
    if (s.empty())
    {
      throw std::invalid_argument{"jurisdiction path has an empty segment"};
    }
    if (s.find('/') != std::string::npos)
    {
      throw std::invalid_argument{"jurisdiction segment contains '/': " + s};
    }
  }
}

JurisdictionId JurisdictionId::parse(std::string_view path)
{
  std::vector<std::string> segments;
  std::size_t              start = 0;
  while (true)
  {
    auto pos = path.find('/', start);
    segments.emplace_back(path.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
    {
      break;
    }
    start = pos + 1;
  }
  if (segments.size() == 1 && segments.front().empty())
  {
    throw std::invalid_argument{"jurisdiction path is empty"};
  }
  return JurisdictionId{std::move(segments)};
}

std::string const &JurisdictionId::leaf() const
{
  if (segments_.empty())
  {
    throw std::logic_error{"leaf() of an empty jurisdiction id"};
  }
  return segments_.back();
}

JurisdictionId JurisdictionId::parent() const
{
  if (segments_.size() < 2)
  {
    throw std::logic_error{"root jurisdiction has no parent"};
  }
  return JurisdictionId{{segments_.begin(), segments_.end() - 1}};
}

JurisdictionId JurisdictionId::child(std::string segment) const
{
  auto segments = segments_;
  segments.push_back(std::move(segment));
  return JurisdictionId{std::move(segments)};
}

bool JurisdictionId::is_parent_of(JurisdictionId const &other) const
{
  return other.segments_.size() == segments_.size() + 1 && is_ancestor_of(other);
}

bool JurisdictionId::is_ancestor_of(JurisdictionId const &other) const
{
  if (other.segments_.size() <= segments_.size())
  {
    return false;
  }
  for (std::size_t i = 0; i < segments_.size(); ++i)
  {
    if (segments_[i] != other.segments_[i])
    {
      return false;
    }
  }
  return true;
}

std::string JurisdictionId::str() const
{
  std::string out;
  for (auto const &s : segments_)
  {
    if (!out.empty())
    {
      out += '/';
    }
    out += s;
  }
  return out;
}

std::string format_halves(int halves)
{
  auto out = std::to_string(halves / 2);
  if (halves % 2 != 0)
  {
    out += ".5";
  }
  return out;
}

JurisdictionTree::JurisdictionTree(JurisdictionId root)
  : root_{std::move(root)}
{
  if (root_.depth() != 0)
  {
    throw HierarchyError{"tree root must be a single segment: " + root_.str()};
  }
  children_[root_];
}

void JurisdictionTree::add(JurisdictionId const &id)
{
  if (id.depth() == 0)
  {
    throw HierarchyError{"second root: " + id.str()};
  }
  if (contains(id))
  {
    throw HierarchyError{"duplicate jurisdiction: " + id.str()};
  }
  auto p  = id.parent();
  auto it = children_.find(p);
  if (it == children_.end())
  {
    throw HierarchyError{"orphan jurisdiction (parent not declared): " + id.str()};
  }
  it->second.push_back(id);
  children_[id];
  parent_.emplace(id, std::move(p));
}

void JurisdictionTree::require(JurisdictionId const &id) const
{
  if (!contains(id))
  {
    throw HierarchyError{"unknown jurisdiction: " + id.str()};
  }
}

void JurisdictionTree::set_weight(JurisdictionId const &id, CantonWeight weight)
{
  require(id);
  if (weight.halves != 1 && weight.halves != 2)
  {
    throw HierarchyError{"canton weight must be 1 or 0.5: " + id.str()};
  }
  weight_[id] = weight;
}

void JurisdictionTree::set_eligible(JurisdictionId const &id, std::uint64_t voters)
{
  require(id);
  eligible_[id] = voters;
}

void JurisdictionTree::set_display_name(JurisdictionId const &id, std::string name)
{
  require(id);
  names_[id] = std::move(name);
}

bool JurisdictionTree::contains(JurisdictionId const &id) const
{
  return children_.contains(id);
}

std::vector<JurisdictionId> const &JurisdictionTree::children(JurisdictionId const &id) const
{
  auto it = children_.find(id);
  if (it == children_.end())
  {
    throw HierarchyError{"unknown jurisdiction: " + id.str()};
  }
  return it->second;
}

std::optional<JurisdictionId> JurisdictionTree::parent(JurisdictionId const &id) const
{
  auto it = parent_.find(id);
  if (it == parent_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

bool JurisdictionTree::is_leaf(JurisdictionId const &id) const
{
  return children(id).empty();
}

void JurisdictionTree::collect(JurisdictionId const &id, std::vector<JurisdictionId> &out) const
{
  out.push_back(id);
  for (auto const &c : children(id))
  {
    collect(c, out);
  }
}

std::vector<JurisdictionId> JurisdictionTree::nodes() const
{
  std::vector<JurisdictionId> out;
  out.reserve(size());
  collect(root_, out);
  return out;
}

std::vector<JurisdictionId> JurisdictionTree::leaves() const
{
  return leaves_under(root_);
}

std::vector<JurisdictionId> JurisdictionTree::leaves_under(JurisdictionId const &id) const
{
  std::vector<JurisdictionId> all;
  collect(id, all);
  std::vector<JurisdictionId> out;
  for (auto &n : all)
  {
    if (children(n).empty())
    {
      out.push_back(std::move(n));
    }
  }
  return out;
}

std::vector<JurisdictionId> JurisdictionTree::cantons() const
{
  std::vector<JurisdictionId> out;
  for (auto &n : nodes())
  {
    if (weight_.contains(n))
    {
      out.push_back(std::move(n));
    }
  }
  return out;
}

std::optional<CantonWeight> JurisdictionTree::weight(JurisdictionId const &id) const
{
  auto it = weight_.find(id);
  if (it == weight_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

int JurisdictionTree::total_weight_halves() const
{
  int sum = 0;
  for (auto const &[id, w] : weight_)
  {
    sum += w.halves;
  }
  return sum;
}

std::optional<std::uint64_t> JurisdictionTree::eligible(JurisdictionId const &id) const
{
  auto it = eligible_.find(id);
  if (it == eligible_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

std::string JurisdictionTree::display_name(JurisdictionId const &id) const
{
  auto it = names_.find(id);
  if (it == names_.end())
  {
    return id.leaf();
  }
  return it->second;
}

std::optional<JurisdictionId> JurisdictionTree::find_canton(std::string_view label) const
{
  for (auto const &[id, w] : weight_)
  {
    if (id.leaf() == label || display_name(id) == label)
    {
      return id;
    }
  }
  return std::nullopt;
}

void JurisdictionTree::validate() const
{
  for (auto const &[id, kids] : children_)
  {
    auto own = eligible(id);
    if (!own || kids.empty())
    {
      continue;
    }
    std::uint64_t sum      = 0;
    bool          complete = true;
    for (auto const &k : kids)
    {
      auto e = eligible(k);
      if (!e)
      {
        complete = false;
        break;
      }
      sum += *e;
    }
    if (complete && sum > *own)
    {
      throw HierarchyError{"eligible voters of " + id.str() + " (" + std::to_string(*own) +
                           ") below the sum over its children (" + std::to_string(sum) + ")"};
    }
  }
}

}  // namespace prelim::core

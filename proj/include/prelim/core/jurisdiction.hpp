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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prelim::core {

/// Path of a jurisdiction from the root, e.g. CH/ZH/Uster.
class JurisdictionId
{
public:
  JurisdictionId() = default;
  explicit JurisdictionId(std::vector<std::string> segments);

  /// Parses a '/'-separated path. Throws std::invalid_argument on empty input
  /// or empty segments.
  static JurisdictionId parse(std::string_view path);

  std::vector<std::string> const &segments() const noexcept
  {
    return segments_;
  }

  bool empty() const noexcept
  {
    return segments_.empty();
  }

  /// Number of links to the root (root has depth 0).
  std::size_t depth() const noexcept
  {
    return segments_.empty() ? 0 : segments_.size() - 1;
  }

  std::string const &leaf() const;
  JurisdictionId     parent() const;
  JurisdictionId     child(std::string segment) const;
  bool               is_parent_of(JurisdictionId const &other) const;
  bool               is_ancestor_of(JurisdictionId const &other) const;
  std::string        str() const;

  friend auto operator<=>(JurisdictionId const &, JurisdictionId const &) = default;

private:
  std::vector<std::string> segments_;
};

/// Cantonal vote weight in half-vote units (full canton = 2, half canton = 1).
struct CantonWeight
{
  int halves = 2;

  static constexpr CantonWeight full()
  {
    return {2};
  }
  static constexpr CantonWeight half()
  {
    return {1};
  }
  double value() const noexcept
  {
    return halves / 2.0;
  }

  friend bool operator==(CantonWeight, CantonWeight) = default;
};

/// Formats a half-vote count as a decimal weight ("11.5", "23").
std::string format_halves(int halves);

/// The aggregation hierarchy: stations -> municipalities -> cantons -> federal.
///
/// Nodes are added top-down; a node's parent is implied by its path and must
/// already be present, which keeps the tree acyclic with a single root.
class JurisdictionTree
{
public:
  explicit JurisdictionTree(JurisdictionId root);

  /// Throws HierarchyError if the parent is missing or the node exists.
  void add(JurisdictionId const &id);

  void set_weight(JurisdictionId const &id, CantonWeight weight);
  void set_eligible(JurisdictionId const &id, std::uint64_t voters);
  void set_display_name(JurisdictionId const &id, std::string name);

  JurisdictionId const &root() const noexcept
  {
    return root_;
  }

  bool                               contains(JurisdictionId const &id) const;
  std::vector<JurisdictionId> const &children(JurisdictionId const &id) const;
  std::optional<JurisdictionId>      parent(JurisdictionId const &id) const;
  bool                               is_leaf(JurisdictionId const &id) const;

  /// All nodes in pre-order (parents before children, siblings in insertion order).
  std::vector<JurisdictionId> nodes() const;
  std::vector<JurisdictionId> leaves() const;
  std::vector<JurisdictionId> leaves_under(JurisdictionId const &id) const;

  /// Weighted (canton-level) nodes in pre-order.
  std::vector<JurisdictionId> cantons() const;
  std::optional<CantonWeight> weight(JurisdictionId const &id) const;
  int                         total_weight_halves() const;

  std::optional<std::uint64_t> eligible(JurisdictionId const &id) const;
  std::string                  display_name(JurisdictionId const &id) const;

  /// Finds a canton by its path segment or display name.
  std::optional<JurisdictionId> find_canton(std::string_view label) const;

  std::size_t size() const noexcept
  {
    return parent_.size() + 1;
  }

  /// Checks eligible(parent) >= sum of eligible(children) where all are known.
  /// Throws HierarchyError.
  void validate() const;

private:
  void require(JurisdictionId const &id) const;
  void collect(JurisdictionId const &id, std::vector<JurisdictionId> &out) const;

  JurisdictionId                                          root_;
  std::map<JurisdictionId, std::vector<JurisdictionId>>  children_;
  std::map<JurisdictionId, JurisdictionId>                parent_;
  std::map<JurisdictionId, CantonWeight>                  weight_;
  std::map<JurisdictionId, std::uint64_t>                 eligible_;
  std::map<JurisdictionId, std::string>                   names_;
};

}  // namespace prelim::core

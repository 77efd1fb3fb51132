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

#include "prelim/core/swiss.hpp"

#include <array>
#include <string>

namespace prelim::core {
namespace {

constexpr auto kFull = CantonWeight::full();
constexpr auto kHalf = CantonWeight::half();

// Eligible voters as of 2019. Six half cantons cast 3 of the 23 cantonal votes.
constexpr std::array<SwissCanton, 26> kCantons{{
    {"AG", "Aargau", 414745, kFull, "Aarau"},
    {"AR", "Appenzell Ausserrhoden", 38498, kHalf, "Herisau"},
    {"AI", "Appenzell Innerrhoden", 11565, kHalf, "Appenzell"},
    {"BL", "Basel-Landschaft", 187863, kHalf, "Liestal"},
    {"BS", "Basel-Stadt", 113717, kHalf, "Basel"},
    {"BE", "Bern", 729203, kFull, "Bern"},
    {"FR", "Fribourg", 196027, kFull, "Fribourg"},
    {"GE", "Genève", 248915, kFull, "Geneve"},
    {"GL", "Glarus", 26268, kFull, "Glarus"},
    {"GR", "Graubünden", 137126, kFull, "Chur"},
    {"JU", "Jura", 51936, kFull, "Delemont"},
    {"LU", "Luzern", 271143, kFull, "Luzern"},
    {"NE", "Neuchâtel", 111304, kFull, "Neuchatel"},
    {"NW", "Nidwalden", 30810, kHalf, "Stans"},
    {"OW", "Obwalden", 26244, kHalf, "Sarnen"},
    {"SH", "Schaffhausen", 51036, kFull, "Schaffhausen"},
    {"SZ", "Schwyz", 102145, kFull, "Schwyz"},
    {"SO", "Solothurn", 177292, kFull, "Solothurn"},
    {"SG", "St. Gallen", 317969, kFull, "StGallen"},
    {"TG", "Thurgau", 206118, kFull, "Frauenfeld"},
    {"TI", "Ticino", 218580, kFull, "Bellinzona"},
    {"UR", "Uri", 31928, kFull, "Altdorf"},
    {"VS", "Valais", 216041, kFull, "Sion"},
    {"VD", "Vaud", 428569, kFull, "Lausanne"},
    {"ZG", "Zug", 74803, kFull, "Zug"},
    {"ZH", "Zürich", 907623, kFull, "Zurich"},
}};

}  // namespace

std::span<SwissCanton const> swiss_cantons()
{
  return kCantons;
}

JurisdictionTree swiss_tree()
{
  JurisdictionTree tree{JurisdictionId{{"CH"}}};
  tree.set_display_name(tree.root(), "Switzerland");
  for (auto const &c : kCantons)
  {
    auto id = tree.root().child(std::string{c.abbreviation});
    tree.add(id);
    tree.set_weight(id, c.weight);
    tree.set_eligible(id, c.eligible_2019);
    tree.set_display_name(id, std::string{c.name});
  }
  return tree;
}

}  // namespace prelim::core

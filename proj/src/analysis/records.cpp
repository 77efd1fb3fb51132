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

#include "prelim/analysis/records.hpp"

#include "prelim/core/errors.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace prelim::analysis {
namespace {

constexpr std::string_view kHeader =
    "referendum_id,date,canton,prelim_yes,prelim_no,final_yes,final_no,final_total";

std::vector<std::string_view> split(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  while (true)
  {
    auto const comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos)
    {
      return out;
    }
    start = comma + 1;
  }
}

template <typename T>
T parse_int(std::string_view s, char const *field, std::size_t row)
{
  T    v   = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
  {
    throw ParseError{std::string{"bad "} + field + " '" + std::string{s} + "'", row};
  }
  return v;
}

std::chrono::year_month_day parse_date(std::string_view s, std::size_t row)
{
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
  {
    throw ParseError{"date is not YYYY-MM-DD: '" + std::string{s} + "'", row};
  }
  auto const y = parse_int<int>(s.substr(0, 4), "year", row);
  auto const m = parse_int<unsigned>(s.substr(5, 2), "month", row);
  auto const d = parse_int<unsigned>(s.substr(8, 2), "day", row);
  std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{m},
                                   std::chrono::day{d}};
  if (!date.ok())
  {
    throw ParseError{"no such date: '" + std::string{s} + "'", row};
  }
  return date;
}

}  // namespace

std::vector<HistoricalRecord> load_results(std::istream &in)
{
  std::vector<HistoricalRecord>                   out;
  std::set<std::pair<std::string, std::string>>   seen;
  std::string                                     line;
  std::size_t                                     row = 0;
  bool                                            header = false;

  while (std::getline(in, line))
  {
    ++row;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.empty())
    {
      continue;
    }
    if (!header)
    {
      if (line != kHeader)
      {
        throw ParseError{"expected header '" + std::string{kHeader} + "'", row};
      }
      header = true;
      continue;
    }
    auto const f = split(line);
    if (f.size() != 8)
    {
      throw ParseError{"expected 8 fields, got " + std::to_string(f.size()), row};
    }
    HistoricalRecord r;
    r.referendum_id = std::string{f[0]};
    r.date          = parse_date(f[1], row);
    r.canton        = std::string{f[2]};
    if (r.referendum_id.empty() || r.canton.empty())
    {
      throw ParseError{"empty referendum id or canton", row};
    }
    r.preliminary.yes = parse_int<std::uint64_t>(f[3], "prelim_yes", row);
    r.preliminary.no  = parse_int<std::uint64_t>(f[4], "prelim_no", row);
    r.final.yes       = parse_int<std::uint64_t>(f[5], "final_yes", row);
    r.final.no        = parse_int<std::uint64_t>(f[6], "final_no", row);
    auto const total  = parse_int<std::uint64_t>(f[7], "final_total", row);
    if (r.final.yes > total || r.final.no > total - r.final.yes)
    {
      throw ParseError{"final_total is below final_yes + final_no", row};
    }
    r.final.blank = total - r.final.yes - r.final.no;
    if (!seen.emplace(r.referendum_id, r.canton).second)
    {
      throw DuplicateRecord{"row " + std::to_string(row) + ": " + r.canton +
                            " appears twice in " + r.referendum_id};
    }
    out.push_back(std::move(r));
  }
  if (!header)
  {
    throw ParseError{"missing header", row + 1};
  }
  return out;
}

std::vector<HistoricalRecord> load_results_file(std::filesystem::path const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw ParseError{"cannot open " + path.string(), 0};
  }
  return load_results(in);
}

}  // namespace prelim::analysis

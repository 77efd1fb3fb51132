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

#include "prelim/analysis/discrepancy.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace prelim::analysis {
namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b)
{
  return a > b ? a - b : b - a;
}

double relative(std::uint64_t votes, std::uint64_t total)
{
  return total == 0 ? 0.0 : static_cast<double>(votes) / static_cast<double>(total);
}

void observe(DiscrepancyStat &stat, std::uint64_t votes, std::uint64_t total,
             std::string const &referendum)
{
  if (stat.referendum_at_max.empty() || votes > stat.max_abs_discrepancy)
  {
    stat.max_abs_discrepancy = votes;
    stat.total_at_max        = total;
    stat.referendum_at_max   = referendum;
  }
  stat.max_relative = std::max(stat.max_relative, relative(votes, total));
}

struct Referendum
{
  std::optional<HistoricalRecord> federal;
  core::VoteCount                 prelim_sum;
  core::VoteCount                 final_sum;
  double                          max_cantonal = 0.0;
};

}  // namespace

std::uint64_t discrepancy(HistoricalRecord const &record)
{
  return abs_diff(record.preliminary.yes, record.final.yes) +
         abs_diff(record.preliminary.no, record.final.no);
}

DiscrepancyReport discrepancy_stats(std::span<HistoricalRecord const> records)
{
  if (records.empty())
  {
    throw std::invalid_argument{"discrepancy_stats needs at least one record"};
  }

  DiscrepancyReport                  report;
  std::map<std::string, std::size_t> index;
  std::vector<std::string>           order;
  std::map<std::string, Referendum>  referendums;

  for (auto const &r : records)
  {
    if (!referendums.contains(r.referendum_id))
    {
      order.push_back(r.referendum_id);
    }
    auto &ref = referendums[r.referendum_id];
    if (r.canton == kFederalLabel)
    {
      ref.federal = r;
      continue;
    }
    auto [it, inserted] = index.emplace(r.canton, report.cantons.size());
    if (inserted)
    {
      DiscrepancyStat stat;
      stat.canton = r.canton;
      report.cantons.push_back(std::move(stat));
    }
    auto const votes = discrepancy(r);
    auto const total = r.final.total();
    observe(report.cantons[it->second], votes, total, r.referendum_id);
    ref.prelim_sum   = ref.prelim_sum + r.preliminary;
    ref.final_sum    = ref.final_sum + r.final;
    ref.max_cantonal = std::max(ref.max_cantonal, relative(votes, total));
  }

  report.federal.canton = kFederalLabel;
  report.referendums    = order.size();
  double federal_sum    = 0.0;
  double cantonal_sum   = 0.0;
  for (auto const &id : order)
  {
    auto const    &ref = referendums.at(id);
    std::uint64_t  votes = 0;
    std::uint64_t  total = 0;
    if (ref.federal)
    {
      votes = discrepancy(*ref.federal);
      total = ref.federal->final.total();
    }
    else
    {
      votes = abs_diff(ref.prelim_sum.yes, ref.final_sum.yes) +
              abs_diff(ref.prelim_sum.no, ref.final_sum.no);
      total = ref.final_sum.total();
    }
    observe(report.federal, votes, total, id);
    federal_sum += relative(votes, total);
    cantonal_sum += ref.max_cantonal;
  }
  report.federal_average      = federal_sum / static_cast<double>(order.size());
  report.average_max_cantonal = cantonal_sum / static_cast<double>(order.size());
  return report;
}

std::string format_percent(double fraction)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

void write_report(std::ostream &os, DiscrepancyReport const &report)
{
  char line[128];
  std::snprintf(line, sizeof line, "%-8s %10s %10s %8s  %s\n", "canton", "votes", "total",
                "max", "referendum");
  os << line;
  auto row = [&](DiscrepancyStat const &s) {
    std::snprintf(line, sizeof line, "%-8s %10llu %10llu %8s  %s\n", s.canton.c_str(),
                  static_cast<unsigned long long>(s.max_abs_discrepancy),
                  static_cast<unsigned long long>(s.total_at_max),
                  format_percent(s.max_relative).c_str(), s.referendum_at_max.c_str());
    os << line;
  };
  for (auto const &s : report.cantons)
  {
    row(s);
  }
  row(report.federal);
  os << "referendums: " << report.referendums << '\n';
  os << "federal average: " << format_percent(report.federal_average) << '\n';
  os << "average largest cantonal: " << format_percent(report.average_max_cantonal) << '\n';
}

void write_summary_csv(std::ostream &os, DiscrepancyReport const &report)
{
  os << "canton,votes,total,percent\n";
  auto row = [&](DiscrepancyStat const &s) {
    char pct[32];
    std::snprintf(pct, sizeof pct, "%.2f", s.max_relative * 100.0);
    os << s.canton << ',' << s.max_abs_discrepancy << ',' << s.total_at_max << ',' << pct << '\n';
  };
  for (auto const &s : report.cantons)
  {
    row(s);
  }
  row(report.federal);
}

}  // namespace prelim::analysis

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

#include "prelim/cli/commands.hpp"

#include "prelim/adversary/detection.hpp"
#include "prelim/analysis/discrepancy.hpp"
#include "prelim/analysis/vulnerability.hpp"
#include "prelim/core/errors.hpp"
#include "prelim/core/swiss.hpp"
#include "prelim/secauth/pki.hpp"
#include "prelim/secauth/signed_report.hpp"
#include "prelim/secauth/trust_store.hpp"
#include "prelim/simnet/simulation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace prelim::cli {
namespace {

// Input the user can fix; maps to kExitConfig.
struct UserError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out)
  {
    throw std::runtime_error{"cannot write " + path};
  }
  out << text;
  out.flush();
  if (!out)
  {
    throw std::runtime_error{"write failed: " + path};
  }
}

struct SimulateArgs
{
  std::string                  scenario;
  std::optional<std::uint64_t> seed;
  std::string                  trace_out;
  std::string                  summary_out;
};

int simulate(SimulateArgs const &a, std::ostream &out)
{
  if (!std::filesystem::exists(a.scenario))
  {
    throw UserError{"scenario file not found: " + a.scenario};
  }
  auto const config = simnet::load_scenario(a.scenario);
  auto       sim    = simnet::build_scenario(config, a.seed);
  auto const truth  = sim.ground_truth_total();
  auto const trace  = sim.run();
  auto const summary = adversary::detection_report(trace, truth);

  if (!a.trace_out.empty())
  {
    write_file(a.trace_out, simnet::to_text(trace));
  }
  if (!a.summary_out.empty())
  {
    std::ostringstream s;
    adversary::write_summary(s, summary);
    write_file(a.summary_out, s.str());
  }

  auto const timeline = simnet::publish_timeline(trace);
  out << "scenario: " << trace.scenario << " (election " << trace.election_id << ", seed "
      << trace.seed << ")\n";
  out << "publications: " << timeline.size() << '\n';
  if (summary.final_totals)
  {
    out << "final: t=" << *summary.final_publication << ' ' << *summary.final_totals << " -> "
        << core::to_string(core::popular_outcome(*summary.final_totals)) << '\n';
  }
  auto last_prelim = std::find_if(timeline.rbegin(), timeline.rend(), [](auto const &p) {
    return p.kind == simnet::ReportKind::Preliminary;
  });
  if (last_prelim != timeline.rend())
  {
    out << "last preliminary: t=" << last_prelim->time << ' ' << last_prelim->totals << " -> "
        << core::to_string(core::popular_outcome(last_prelim->totals)) << '\n';
  }
  out << "divergences: " << summary.divergences.size() << '\n';
  out << "coverage gaps: " << summary.coverage_gaps.size() << '\n';
  out << "detections: " << summary.detections.size() << '\n';
  out << "integrity gap: " << summary.integrity_gap << " ticks\n";
  out << "outcome reversals: " << summary.outcome_reversals << '\n';
  out << "final matches ground truth: " << (summary.final_matches_ground_truth ? "yes" : "no")
      << '\n';
  return kExitOk;
}

struct FlipArgs
{
  std::string results;
  std::string referendum;
  std::string rule = "popular";
  std::string target;
};

int flip(FlipArgs const &a, std::ostream &out)
{
  auto const records = analysis::load_results_file(a.results);
  auto const known   = std::any_of(records.begin(), records.end(),
                                   [&](auto const &r) { return r.referendum_id == a.referendum; });
  if (!known)
  {
    throw UserError{"no records for referendum '" + a.referendum + "'"};
  }
  auto const tree = core::swiss_tree();
  core::ReferendumSpec spec{a.referendum, a.rule == "double" ? core::MajorityRule::DoubleMajority
                                                             : core::MajorityRule::PopularOnly};
  auto const counts  = analysis::final_counts(records, a.referendum, tree);
  auto const outcome = core::referendum_outcome(spec, counts, tree);

  auto target = core::opposite(spec.majority_rule == core::MajorityRule::DoubleMajority
                                   ? outcome.overall
                                   : outcome.popular);
  if (a.target == "accepted")
  {
    target = core::Decision::Accepted;
  }
  else if (a.target == "rejected")
  {
    target = core::Decision::Rejected;
  }

  std::vector<core::VoteCount> all;
  for (auto const &[id, c] : counts)
  {
    all.push_back(c);
  }
  auto const total = core::accumulate(all);
  auto const plan  = spec.majority_rule == core::MajorityRule::DoubleMajority
                         ? core::min_flips_double(counts, tree, spec, target)
                         : core::min_flips_popular(total, target);

  out << "referendum: " << a.referendum << '\n';
  out << "rule: " << a.rule << '\n';
  out << "final: " << total << '\n';
  out << "popular: " << core::to_string(outcome.popular) << '\n';
  if (outcome.cantonal)
  {
    out << "cantonal: " << core::to_string(*outcome.cantonal) << " ("
        << core::format_halves(outcome.yes_halves) << " of "
        << core::format_halves(tree.total_weight_halves()) << " cantonal votes yes)\n";
  }
  out << "overall: " << core::to_string(outcome.overall) << '\n';
  out << "target: " << core::to_string(plan.achieves) << '\n';
  out << "total_flips: " << plan.total_flips << '\n';
  for (auto const &[id, n] : plan.flips_per_canton)
  {
    out << "flips " << id.leaf() << " (" << tree.display_name(id) << "): " << n << '\n';
  }
  return kExitOk;
}

struct AnalyzeArgs
{
  std::string results;
  std::string out;
};

int analyze(AnalyzeArgs const &a, std::ostream &out)
{
  auto const records = analysis::load_results_file(a.results);
  if (records.empty())
  {
    out << "no records\n";
    if (!a.out.empty())
    {
      write_file(a.out, "canton,votes,total,percent\n");
    }
    return kExitOk;
  }
  auto const report = analysis::discrepancy_stats(records);
  analysis::write_report(out, report);
  if (!a.out.empty())
  {
    std::ostringstream s;
    analysis::write_summary_csv(s, report);
    write_file(a.out, s.str());
  }
  return kExitOk;
}

struct KeysArgs
{
  std::string                  tree;
  std::string                  out_dir;
  std::optional<std::uint64_t> seed;
  std::string                  scheme = "ed25519";
};

int keys(KeysArgs const &a, std::ostream &out, std::ostream &err)
{
  if (!std::filesystem::exists(a.tree))
  {
    throw UserError{"tree file not found: " + a.tree};
  }
  auto const *scheme = secauth::scheme_by_name(a.scheme);
  if (!scheme)
  {
    throw UserError{"unknown scheme '" + a.scheme + "'"};
  }
  auto const tree = simnet::build_tree(simnet::load_scenario(a.tree));
  auto const pki  = secauth::bootstrap_pki(tree, *scheme, a.seed);
  secauth::write_trust_store(a.out_dir, pki.root, pki.certificates);

  auto const store = secauth::load_trust_store(a.out_dir);
  secauth::RevocationList const none;
  std::size_t verified = 0;
  for (auto const &[subject, cert] : store.certificates)
  {
    if (auto reason = secauth::verify_chain(subject, store.chain_for(subject), store.root, none))
    {
      err << "chain of " << subject.str() << " does not verify: " << secauth::to_string(*reason)
          << '\n';
      return kExitError;
    }
    ++verified;
  }
  out << "certificates: " << store.certificates.size() + 1 << " (1 root, " << verified
      << " verified chains)\n";
  out << "scheme: " << a.scheme << '\n';
  out << "trust store: " << a.out_dir << '\n';
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Preliminary-result aggregation simulator", "prelimsim"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  auto *sim = app.add_subcommand("simulate", "Run a scenario and write trace and summary");
  sim->add_option("--scenario", sim_args.scenario, "Scenario file")->required();
  sim->add_option("--seed", sim_args.seed, "Override the scenario seed");
  sim->add_option("--trace-out", sim_args.trace_out, "Event trace output file");
  sim->add_option("--summary-out", sim_args.summary_out, "Detection summary output file");

  FlipArgs flip_args;
  auto *fl = app.add_subcommand("flip", "Minimum ballot flips reversing a referendum");
  fl->add_option("--results", flip_args.results, "Results CSV")->required();
  fl->add_option("--referendum", flip_args.referendum, "Referendum id")->required();
  fl->add_option("--rule", flip_args.rule, "Majority rule")
      ->check(CLI::IsMember({"popular", "double"}));
  fl->add_option("--target", flip_args.target, "Outcome to reach (default: the reverse)")
      ->check(CLI::IsMember({"accepted", "rejected"}));

  AnalyzeArgs analyze_args;
  auto *an = app.add_subcommand("analyze", "Preliminary-versus-final discrepancy statistics");
  an->add_option("--results", analyze_args.results, "Results CSV")->required();
  an->add_option("--out", analyze_args.out, "Summary CSV output file");

  KeysArgs keys_args;
  auto *ke = app.add_subcommand("keys", "Issue a certificate hierarchy into a trust store");
  ke->add_option("--tree", keys_args.tree, "Scenario file declaring the tree")->required();
  ke->add_option("--out-dir", keys_args.out_dir, "Trust store directory")->required();
  ke->add_option("--seed", keys_args.seed, "Derive keys deterministically");
  ke->add_option("--scheme", keys_args.scheme, "Signature scheme")
      ->check(CLI::IsMember({"ed25519", "schnorr-test"}));

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (CLI::ParseError const &e)
  {
    auto const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try
  {
    if (*sim)
    {
      return simulate(sim_args, out);
    }
    if (*fl)
    {
      return flip(flip_args, out);
    }
    if (*an)
    {
      return analyze(analyze_args, out);
    }
    return keys(keys_args, out, err);
  }
  catch (UserError const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (ConfigError const &e)
  {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (CapabilityError const &e)
  {
    err << "capability error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (ParseError const &e)
  {
    err << "parse error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (DuplicateRecord const &e)
  {
    err << "data error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (MissingCanton const &e)
  {
    err << "data error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (UnknownCanton const &e)
  {
    err << "data error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (Infeasible const &e)
  {
    err << "infeasible: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace prelim::cli

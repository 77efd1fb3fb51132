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

#include "prelim/adversary/attack.hpp"
#include "prelim/adversary/detection.hpp"
#include "prelim/core/errors.hpp"
#include "prelim/core/outcome.hpp"
#include "prelim/secauth/pki.hpp"
#include "prelim/secauth/scheme.hpp"
#include "support/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace prelim;
using namespace prelim::adversary;
using core::JurisdictionId;
using core::VoteCount;
using simnet::ChannelPreset;
using simnet::Report;
using simnet::ReportKind;

namespace {

JurisdictionId id(char const *p)
{
  return JurisdictionId::parse(p);
}

Report prelim_report(VoteCount c, std::uint64_t seq = 1)
{
  return Report{"e1", id("F/C/M"), seq, c, ReportKind::Preliminary, 10};
}

AttackSpec spec_of(AttackKind kind, std::variant<TamperParams, DelayParams, FrontRunParams> params)
{
  AttackSpec s;
  s.kind        = kind;
  s.target_edge = {id("F/C/M"), id("F/C")};
  s.params      = std::move(params);
  return s;
}

simnet::ChannelSpec wrapped(simnet::ChannelSpec const &plain)
{
  core::JurisdictionTree tree{id("F")};
  tree.add(id("F/C"));
  tree.add(id("F/C/M"));
  auto const pki = secauth::bootstrap_pki(tree, secauth::schnorr_test(), 1);
  return secauth::wrap_channel(plain, pki, {id("F/C/M"), id("F/C")});
}

std::vector<simnet::PublishRecord> prelims(simnet::EventTrace const &trace)
{
  auto all = fixture::records_of<simnet::PublishRecord>(trace);
  std::erase_if(all, [](auto const &p) { return p.kind != ReportKind::Preliminary; });
  return all;
}

std::string without_attack_lines(std::string const &text)
{
  std::istringstream in{text};
  std::string        line, out;
  while (std::getline(in, line))
  {
    if (line.rfind("attack ", 0) != 0)
    {
      out += line + '\n';
    }
  }
  return out;
}

double yes_share(VoteCount const &c)
{
  return c.yes + c.no == 0 ? 0.0 : static_cast<double>(c.yes) / static_cast<double>(c.yes + c.no);
}

}  // namespace

TEST(Mutation, Examples)
{
  EXPECT_EQ(mutate({300, 500, 0, 0}, SwapYesNo{}), (VoteCount{500, 300, 0, 0}));
  EXPECT_EQ(mutate({300, 500, 4, 2}, Shift{0}), (VoteCount{300, 500, 4, 2}));
  EXPECT_EQ(mutate({300, 500, 0, 0}, Shift{+100}), (VoteCount{400, 400, 0, 0}));
  EXPECT_EQ(mutate({300, 500, 0, 0}, Shift{-1000}), (VoteCount{0, 800, 0, 0}));
  EXPECT_EQ(mutate({300, 500, 0, 0}, Shift{+1000}), (VoteCount{800, 0, 0, 0}));
  EXPECT_EQ(mutate({300, 500, 0, 0}, SetCounts{{1, 2, 3, 4}}), (VoteCount{1, 2, 3, 4}));
  EXPECT_EQ(describe(SwapYesNo{}), "swap");
  EXPECT_EQ(describe(Shift{-1825}), "shift:-1825");
  EXPECT_EQ(describe(Shift{7}), "shift:+7");
}

TEST(Mutation, SwapAndShiftPreserveTotals)
{
  std::mt19937_64 rng{11};
  for (int i = 0; i < 2000; ++i)
  {
    VoteCount const c{rng() % 10000, rng() % 10000, rng() % 100, rng() % 100};
    auto const      delta = static_cast<std::int64_t>(rng() % 40001) - 20000;
    for (auto const &m : std::vector<Mutation>{SwapYesNo{}, Shift{delta}})
    {
      auto const out = mutate(c, m);
      EXPECT_EQ(out.total(), c.total());
      EXPECT_EQ(out.blank, c.blank);
      EXPECT_EQ(out.invalid, c.invalid);
    }
    EXPECT_EQ(mutate(mutate(c, SwapYesNo{}), SwapYesNo{}), c);
  }
}

TEST(Tamper, ReplacesTheReport)
{
  auto const channel = simnet::preset_channel(ChannelPreset::Telephone, "phone", 5);
  auto const out     = apply_tamper(prelim_report({300, 500, 0, 0}), SwapYesNo{}, channel);
  EXPECT_EQ(out.counts, (VoteCount{500, 300, 0, 0}));
  EXPECT_EQ(out.sequence_no, 1u);
  EXPECT_EQ(out.sender, id("F/C/M"));
}

TEST(Tamper, RejectedOnProtectedChannels)
{
  auto const postal = simnet::preset_channel(ChannelPreset::PostalFinal, "post", 1440);
  auto       final  = prelim_report({1, 2, 0, 0});
  final.kind        = ReportKind::Final;
  EXPECT_THROW(apply_tamper(final, SwapYesNo{}, postal), CapabilityError);
  auto const email = simnet::preset_channel(ChannelPreset::Email, "mail", 3);
  EXPECT_THROW(apply_tamper(prelim_report({1, 2, 0, 0}), SwapYesNo{}, wrapped(email)), CapabilityError);
  EXPECT_THROW(apply_tamper(final, SwapYesNo{}, email), CapabilityError);
}

TEST(Delay, PostponesWithoutTouchingContent)
{
  auto const email = simnet::preset_channel(ChannelPreset::Email, "mail", 3);
  EXPECT_EQ(apply_delay(40, 0, email), 40);
  EXPECT_EQ(apply_delay(40, 100, email), 140);
  EXPECT_EQ(apply_delay(40, 100, wrapped(email)), 140);
  EXPECT_THROW(apply_delay(40, -1, email), std::invalid_argument);
  auto stuck      = email;
  stuck.delayable = false;
  EXPECT_THROW(apply_delay(40, 5, stuck), CapabilityError);
}

TEST(FrontRun, Gates)
{
  auto const email   = simnet::preset_channel(ChannelPreset::Email, "mail", 3);
  simnet::Edge const edge{id("F/C/M"), id("F/C")};
  auto const         forged = prelim_report({900, 100, 0, 0}, 1001);
  auto const         inj    = apply_front_run(edge, forged, email, 17);
  EXPECT_EQ(inj.deliver_at, 17);
  EXPECT_EQ(inj.forged, forged);
  EXPECT_THROW(apply_front_run(edge, forged, wrapped(email), 17), CapabilityError);
  auto other   = forged;
  other.sender = id("F/C");
  EXPECT_THROW(apply_front_run(edge, other, email, 17), std::invalid_argument);
}

TEST(FrontRun, ForgedSequenceNumbers)
{
  auto const     genuine = prelim_report({100, 900, 0, 0}, 3);
  FrontRunParams p;
  p.forged = {900, 100, 0, 0};
  EXPECT_EQ(forge_report(p, genuine).sequence_no, 1003u);
  p.sequence_offset = 0;
  EXPECT_EQ(forge_report(p, genuine).sequence_no, 3u);
  p.sequence_no = 0;
  auto const f  = forge_report(p, genuine);
  EXPECT_EQ(f.sequence_no, 0u);
  EXPECT_EQ(f.counts, p.forged);
  EXPECT_EQ(f.sender, genuine.sender);
  EXPECT_EQ(f.election_id, genuine.election_id);
}

TEST(Capability, PresetAndWrappedMatrix)
{
  AttackSpec const tamper   = spec_of(AttackKind::Tamper, TamperParams{SwapYesNo{}});
  AttackSpec const delay    = spec_of(AttackKind::Delay, DelayParams{5});
  AttackSpec const frontrun = spec_of(AttackKind::FrontRun, FrontRunParams{{1, 0, 0, 0}, {}, 1000});
  for (auto p : {ChannelPreset::Telephone, ChannelPreset::Fax, ChannelPreset::Email,
                 ChannelPreset::DedicatedSoftware})
  {
    auto const plain = simnet::preset_channel(p, "c", 1);
    EXPECT_NO_THROW(check_capability(tamper, plain)) << simnet::to_string(p);
    EXPECT_NO_THROW(check_capability(frontrun, plain)) << simnet::to_string(p);
    EXPECT_NO_THROW(check_capability(delay, plain)) << simnet::to_string(p);

    auto const secure = wrapped(plain);
    EXPECT_TRUE(secure.integrity);
    EXPECT_TRUE(secure.authenticity);
    EXPECT_TRUE(secure.delayable);
    EXPECT_THROW(check_capability(tamper, secure), CapabilityError) << simnet::to_string(p);
    EXPECT_THROW(check_capability(frontrun, secure), CapabilityError) << simnet::to_string(p);
    EXPECT_NO_THROW(check_capability(delay, secure)) << simnet::to_string(p);
  }
  auto const postal = simnet::preset_channel(ChannelPreset::PostalFinal, "post", 1440);
  EXPECT_THROW(check_capability(tamper, postal), CapabilityError);
  EXPECT_THROW(check_capability(frontrun, postal), CapabilityError);
  EXPECT_NO_THROW(check_capability(delay, postal));
}

TEST(Capability, ScenarioBuildRejectsGatedAttacks)
{
  auto config = fixture::scenario("polarized");
  config.secure = simnet::SecureDecl{};
  config.attacks.push_back({spec_of(AttackKind::Tamper, TamperParams{SwapYesNo{}}), false, "x", 3});
  config.attacks.back().spec.target_edge = {id("F/North/City"), id("F/North")};
  try
  {
    simnet::build_scenario(config);
    FAIL() << "tamper on a wrapped channel was accepted";
  }
  catch (CapabilityError const &e)
  {
    EXPECT_NE(std::string{e.what()}.find("x:3"), std::string::npos) << e.what();
  }
  config.attacks.back().spec = spec_of(AttackKind::FrontRun, FrontRunParams{{1, 0, 0, 0}, {}, 1});
  config.attacks.back().spec.target_edge = {id("F/North"), id("F")};
  EXPECT_THROW(simnet::build_scenario(config), CapabilityError);
}

TEST(Delay, ZeroHoldMatchesTheNoAttackRun)
{
  for (auto const &name : {"polarized", "swiss_preset"})
  {
    auto const base   = fixture::scenario(name);
    auto       config = base;
    auto const tree   = simnet::build_tree(base);
    std::size_t line  = 0;
    for (auto const &node : tree.nodes())
    {
      if (node != tree.root())
      {
        config.attacks.push_back({spec_of(AttackKind::Delay, DelayParams{0}), false, "x", ++line});
        config.attacks.back().spec.target_edge = {node, *tree.parent(node)};
      }
    }
    auto const attacked = fixture::run(config);
    EXPECT_FALSE(fixture::records_of<simnet::AttackRecord>(attacked).empty());
    EXPECT_EQ(without_attack_lines(simnet::to_text(attacked)), simnet::to_text(fixture::run(base)))
        << name;
  }
}

TEST(Delay, CityDelaySkewsPreliminariesRural)
{
  auto const baseline = fixture::run(fixture::scenario("polarized"));
  auto const delayed  = fixture::run(fixture::scenario("city_delay"));
  auto const base_tl  = simnet::publish_timeline(baseline);
  auto const del_tl   = simnet::publish_timeline(delayed);
  EXPECT_EQ(base_tl.back().totals, del_tl.back().totals);
  EXPECT_EQ(base_tl.back().kind, ReportKind::Final);
  EXPECT_EQ(core::popular_outcome(base_tl.back().totals), core::Decision::Accepted);

  // Before the cities arrive, the delayed run publishes the rural districts
  // alone: strictly lower yes share than any complete count.
  std::size_t rural_only = 0;
  for (auto const &p : prelims(delayed))
  {
    if (p.leaves_covered == 3 && p.totals == VoteCount{12500, 27500, 0, 50})
    {
      ++rural_only;
      EXPECT_EQ(core::popular_outcome(p.totals), core::Decision::Rejected);
    }
  }
  EXPECT_GE(rural_only, 1u);

  // Over the whole window the delayed run lags the baseline's yes share.
  auto share_before = [](std::vector<simnet::PublicationPoint> const &tl, simnet::Tick t) {
    double s = 0;
    for (auto const &p : tl)
    {
      if (p.kind == ReportKind::Preliminary && p.time <= t)
      {
        s = yes_share(p.totals);
      }
    }
    return s;
  };
  auto const complete = [](auto const &trace) {
    for (auto const &p : prelims(trace))
    {
      if (p.leaves_covered == p.leaves_total)
      {
        return p.time;
      }
    }
    return simnet::Tick{-1};
  };
  auto const base_done = complete(baseline);
  auto const del_done  = complete(delayed);
  EXPECT_GE(del_done, base_done + 90);
  EXPECT_LT(share_before(del_tl, base_done), share_before(base_tl, base_done));
}

TEST(Delay, NeverAltersCounts)
{
  for (auto const &name : {"city_delay", "secure_delay"})
  {
    auto sim   = simnet::build_scenario(fixture::scenario(name));
    auto truth = sim.ground_truth_total();
    auto trace = sim.run();
    auto summary = detection_report(trace, truth);
    EXPECT_TRUE(summary.divergences.empty()) << name;
    EXPECT_TRUE(summary.detections.empty()) << name;
    EXPECT_FALSE(summary.coverage_gaps.empty()) << name;
    EXPECT_EQ(summary.outcome_reversals, 0u);
    EXPECT_TRUE(summary.final_matches_ground_truth);
    for (auto const &p : prelims(trace))
    {
      EXPECT_EQ(p.totals, p.truth);
    }
  }
}

TEST(Detection, NoAttackRunIsClean)
{
  for (auto const &name : {"minimal", "polarized", "swiss_preset"})
  {
    auto sim     = simnet::build_scenario(fixture::scenario(name));
    auto truth   = sim.ground_truth_total();
    auto summary = detection_report(sim.run(), truth);
    EXPECT_TRUE(summary.divergences.empty());
    EXPECT_TRUE(summary.detections.empty());
    EXPECT_FALSE(summary.first_divergence);
    EXPECT_EQ(summary.integrity_gap, 0);
    EXPECT_TRUE(summary.final_matches_ground_truth);
  }
}

TEST(Detection, SwapDivergesUntilTheFinal)
{
  auto sim     = simnet::build_scenario(fixture::scenario("swap"));
  auto truth   = sim.ground_truth_total();
  auto trace   = sim.run();
  auto summary = detection_report(trace, truth);
  ASSERT_FALSE(summary.divergences.empty());
  ASSERT_TRUE(summary.final_publication);
  EXPECT_TRUE(summary.final_matches_ground_truth);
  EXPECT_EQ(*summary.first_divergence, summary.divergences.front().time);
  EXPECT_EQ(summary.integrity_gap, *summary.final_publication - *summary.first_divergence);

  // Once Hills is covered every publication carries its swapped 7000/3000.
  std::size_t divergent = 0;
  bool        hills     = false;
  for (auto const &p : prelims(trace))
  {
    hills = hills || p.totals != p.truth;
    EXPECT_EQ(p.totals != p.truth, hills);
    if (p.totals != p.truth)
    {
      ++divergent;
      EXPECT_EQ(p.totals.yes, p.truth.yes + 4000);
      EXPECT_EQ(p.totals.no + 4000, p.truth.no);
    }
  }
  EXPECT_EQ(divergent, summary.divergences.size());
  EXPECT_LT(summary.divergences.back().time, *summary.final_publication);
}

TEST(Detection, FrontRunForgedAcceptedGenuineStale)
{
  auto sim     = simnet::build_scenario(fixture::scenario("frontrun"));
  auto truth   = sim.ground_truth_total();
  auto trace   = sim.run();
  auto summary = detection_report(trace, truth);

  auto const delivered = fixture::records_of<simnet::DeliverRecord>(trace);
  auto const forged    = std::find_if(delivered.begin(), delivered.end(),
                                      [](auto const &d) { return d.origin == simnet::Origin::Forged; });
  ASSERT_NE(forged, delivered.end());
  EXPECT_TRUE(forged->accepted);
  EXPECT_EQ(forged->report.sequence_no, 1001u);
  EXPECT_EQ(forged->report.counts, (VoteCount{900, 100, 0, 0}));
  auto const genuine = std::find_if(forged, delivered.end(), [](auto const &d) {
    return d.origin == simnet::Origin::Genuine && d.edge.sender == JurisdictionId::parse("F/C/M");
  });
  ASSERT_NE(genuine, delivered.end());
  EXPECT_FALSE(genuine->accepted);
  EXPECT_GT(genuine->time, forged->time);

  ASSERT_EQ(summary.detections.size(), 1u);
  EXPECT_EQ(summary.detections[0].reason, simnet::DetectReason::StaleSequence);
  EXPECT_EQ(summary.detections[0].from, id("F/C/M"));
  EXPECT_FALSE(summary.divergences.empty());
  EXPECT_TRUE(summary.final_matches_ground_truth);
}

TEST(Detection, FrontRunSequenceVariants)
{
  struct Case
  {
    std::uint64_t seq;
    bool          forged_accepted;
    bool          genuine_accepted;
  };
  for (auto c : {Case{0, false, true}, Case{1, true, false}, Case{2, true, false}})
  {
    auto config = fixture::scenario("frontrun");
    std::get<FrontRunParams>(config.attacks.at(0).spec.params).sequence_no = c.seq;
    auto const trace = fixture::run(config);
    for (auto const &d : fixture::records_of<simnet::DeliverRecord>(trace))
    {
      if (d.edge.sender != id("F/C/M") || d.report.kind != ReportKind::Preliminary)
      {
        continue;
      }
      auto const expect = d.origin == simnet::Origin::Forged ? c.forged_accepted : c.genuine_accepted;
      EXPECT_EQ(d.accepted, expect) << "seq=" << c.seq << ' ' << simnet::to_string(d.origin);
    }
    auto const detects = fixture::records_of<simnet::DetectRecord>(trace);
    ASSERT_EQ(detects.size(), 1u);
    EXPECT_EQ(detects[0].reason, simnet::DetectReason::StaleSequence);
  }
}

TEST(Detection, OmniscientFlipReproduction)
{
  auto sim   = simnet::build_scenario(fixture::scenario("rtvg_flip"));
  auto truth = sim.ground_truth_total();
  EXPECT_EQ(truth.yes, 1128522u);
  EXPECT_EQ(truth.no, 1124873u);
  auto const trace   = sim.run();
  auto const summary = detection_report(trace, truth);

  auto const attacks = fixture::records_of<simnet::AttackRecord>(trace);
  ASSERT_FALSE(attacks.empty());
  for (auto const &a : attacks)
  {
    EXPECT_TRUE(a.omniscient);
    EXPECT_EQ(a.edge.sender, id("CH/BL"));
    EXPECT_EQ(a.action.rfind("shift:-1825 ", 0), 0u) << a.action;
  }

  auto const tl = simnet::publish_timeline(trace);
  ASSERT_GE(tl.size(), 2u);
  auto const &last = tl[tl.size() - 2];
  EXPECT_EQ(last.kind, ReportKind::Preliminary);
  EXPECT_EQ(last.totals.yes, truth.yes - 1825);
  EXPECT_EQ(last.totals.no, truth.no + 1825);
  EXPECT_EQ(core::popular_outcome(last.totals), core::Decision::Rejected);
  EXPECT_EQ(core::popular_outcome(tl.back().totals), core::Decision::Accepted);
  EXPECT_EQ(tl.back().totals, truth);
  EXPECT_EQ(summary.outcome_reversals, 1u);
  EXPECT_TRUE(summary.final_matches_ground_truth);
  EXPECT_GT(summary.integrity_gap, 0);
}

TEST(Detection, OneFlipFewerDoesNotReverse)
{
  auto config = fixture::scenario("rtvg_flip");
  config.attacks.at(0).flip_popular = false;
  config.attacks.at(0).spec.params  = TamperParams{Shift{-1824}};
  auto sim     = simnet::build_scenario(config);
  auto truth   = sim.ground_truth_total();
  auto summary = detection_report(sim.run(), truth);
  EXPECT_EQ(summary.outcome_reversals, 0u);
  EXPECT_FALSE(summary.divergences.empty());
}

TEST(Detection, SummaryText)
{
  auto sim   = simnet::build_scenario(fixture::scenario("swap"));
  auto truth = sim.ground_truth_total();
  std::ostringstream os;
  write_summary(os, detection_report(sim.run(), truth));
  auto const text = os.str();
  EXPECT_EQ(text.rfind("# prelimsim detection summary v1\nfinal t=", 0), 0u) << text;
  EXPECT_NE(text.find("matches_truth=1"), std::string::npos);
  EXPECT_NE(text.find("integrity_gap ticks="), std::string::npos);
  EXPECT_NE(text.find("outcome_reversals count=0"), std::string::npos);
  EXPECT_NE(text.find("\ndivergence t="), std::string::npos);
  EXPECT_NE(text.find("\ngap t="), std::string::npos);
}

TEST(FinalImmunity, RandomizedCapabilityMatrix)
{
  auto const r = fixture::capability_matrix(150, 2024);
  for (auto const &v : r.violations)
  {
    ADD_FAILURE() << v;
  }
  EXPECT_EQ(r.runs, 150u);
  EXPECT_GT(r.rejected_builds, 0u);
  EXPECT_GT(r.tamper_applied, 0u);
  EXPECT_GT(r.frontrun_applied, 0u);
  EXPECT_GT(r.delay_on_wrapped, 0u);
}

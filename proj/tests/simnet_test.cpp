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

#include "prelim/core/errors.hpp"
#include "prelim/core/swiss.hpp"
#include "prelim/simnet/node.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace prelim;
using namespace prelim::simnet;
using core::JurisdictionId;
using core::VoteCount;

namespace {

JurisdictionId id(char const *p)
{
  return JurisdictionId::parse(p);
}

Report prelim_report(char const *sender, std::uint64_t seq, VoteCount c)
{
  return Report{"e1", id(sender), seq, c, ReportKind::Preliminary, 0};
}

Report final_report(char const *sender, VoteCount c)
{
  return Report{"e1", id(sender), 7, c, ReportKind::Final, 0};
}

core::JurisdictionTree small_tree()
{
  core::JurisdictionTree t{id("F")};
  for (auto p : {"F/A", "F/B", "F/C"})
  {
    t.add(id(p));
    t.set_eligible(id(p), 1000);
  }
  return t;
}

std::string config_error(std::string const &text)
{
  try
  {
    auto config = fixture::parse(text);
    build_scenario(config);
  }
  catch (ConfigError const &e)
  {
    return e.what();
  }
  return "no error";
}

char const *kBase = R"(
channel phone preset=Telephone latency=5
node F
node F/C eligible=1000 channel=phone
node F/C/M eligible=1000 channel=phone
)";

std::vector<std::string> const kScenarios = {"minimal",  "polarized", "city_delay", "frontrun",
                                             "swap",     "secure_delay", "swiss_preset",
                                             "rtvg_flip"};

}  // namespace

TEST(Feasibility, Examples)
{
  auto const  tree = small_tree();
  LastSeenSeq seen;
  EXPECT_FALSE(feasibility_check(prelim_report("F/A", 1, {500, 300, 0, 0}), tree, id("F"), seen));
  EXPECT_EQ(feasibility_check(prelim_report("F/A", 1, {700, 500, 0, 0}), tree, id("F"), seen),
            FeasibilityFailure::OverEligible);
  EXPECT_EQ(feasibility_check(prelim_report("F/Z", 1, {1, 0, 0, 0}), tree, id("F"), seen),
            FeasibilityFailure::UnknownSender);
  EXPECT_EQ(feasibility_check(prelim_report("F/A", 0, {1, 0, 0, 0}), tree, id("F"), seen),
            FeasibilityFailure::StaleSequence);
  seen[{id("F/A"), "e1"}] = 4;
  EXPECT_EQ(feasibility_check(prelim_report("F/A", 4, {1, 0, 0, 0}), tree, id("F"), seen),
            FeasibilityFailure::StaleSequence);
  EXPECT_FALSE(feasibility_check(prelim_report("F/A", 5, {1, 0, 0, 0}), tree, id("F"), seen));
}

TEST(NodeReceive, PreliminaryForwardsImmediately)
{
  auto const  tree    = small_tree();
  auto const  channel = preset_channel(ChannelPreset::Email, "mail", 1);
  NodeState   state;
  state.id = id("F");

  auto r1 = node_receive_preliminary(state, prelim_report("F/A", 1, {10, 20, 0, 0}), channel, tree, 5);
  ASSERT_TRUE(r1.forwarded);
  EXPECT_EQ(r1.forwarded->counts, (VoteCount{10, 20, 0, 0}));
  EXPECT_EQ(r1.forwarded->sequence_no, 1u);
  EXPECT_EQ(r1.forwarded->emitted_at, 5);

  auto r2 = node_receive_preliminary(state, prelim_report("F/B", 1, {1, 2, 3, 0}), channel, tree, 6);
  ASSERT_TRUE(r2.forwarded);
  EXPECT_EQ(r2.forwarded->counts, (VoteCount{11, 22, 3, 0}));
  EXPECT_EQ(r2.forwarded->sequence_no, 2u);

  // A newer report from A replaces the old one rather than adding to it.
  auto r3 = node_receive_preliminary(state, prelim_report("F/A", 2, {12, 20, 0, 0}), channel, tree, 7);
  EXPECT_EQ(r3.forwarded->counts, (VoteCount{13, 22, 3, 0}));

  // Re-delivering a captured report is rejected as stale.
  auto replay = node_receive_preliminary(state, prelim_report("F/A", 1, {10, 20, 0, 0}), channel, tree, 8);
  EXPECT_FALSE(replay.forwarded);
  EXPECT_EQ(replay.failure, FeasibilityFailure::StaleSequence);

  auto over = node_receive_preliminary(state, prelim_report("F/C", 1, {1200, 0, 0, 0}), channel, tree, 9);
  EXPECT_EQ(over.failure, FeasibilityFailure::OverEligible);
  EXPECT_FALSE(state.received_prelim.contains(id("F/C")));
}

TEST(NodeReceive, FinalWaitsForEveryChild)
{
  auto const tree = small_tree();
  NodeState  state;
  state.id = id("F");
  EXPECT_FALSE(node_receive_final(state, final_report("F/A", {1, 2, 0, 0}), tree, 1));
  EXPECT_FALSE(node_receive_final(state, final_report("F/B", {3, 4, 0, 0}), tree, 2));
  EXPECT_FALSE(node_receive_final(state, final_report("F/B", {3, 4, 0, 0}), tree, 3));
  auto up = node_receive_final(state, final_report("F/C", {5, 6, 1, 1}), tree, 4);
  ASSERT_TRUE(up);
  EXPECT_EQ(up->counts, (VoteCount{9, 12, 1, 1}));
  EXPECT_EQ(up->kind, ReportKind::Final);
  EXPECT_FALSE(node_receive_final(state, final_report("F/C", {5, 6, 1, 1}), tree, 5));
  EXPECT_THROW(node_receive_final(state, final_report("F/A", {2, 1, 0, 0}), tree, 6), DuplicateFinal);
}

TEST(Channel, Presets)
{
  for (auto p : {ChannelPreset::Telephone, ChannelPreset::Fax, ChannelPreset::Email,
                 ChannelPreset::DedicatedSoftware})
  {
    auto c = preset_channel(p, "c", 1);
    EXPECT_FALSE(c.integrity);
    EXPECT_FALSE(c.authenticity);
    EXPECT_TRUE(c.delayable);
    EXPECT_TRUE(carries(c, ReportKind::Preliminary));
    EXPECT_FALSE(carries(c, ReportKind::Final));
  }
  auto postal = preset_channel(ChannelPreset::PostalFinal, "post", 1440);
  EXPECT_TRUE(postal.integrity);
  EXPECT_TRUE(postal.authenticity);
  EXPECT_TRUE(postal.delayable);
  EXPECT_TRUE(carries(postal, ReportKind::Final));
  EXPECT_FALSE(carries(postal, ReportKind::Preliminary));
}

TEST(Scenario, MinimalHasTwoEdges)
{
  auto sim = build_scenario(fixture::scenario("minimal"));
  EXPECT_EQ(sim.edge_count(), 2u);
  EXPECT_EQ(sim.tree().leaves().size(), 1u);
  EXPECT_EQ(sim.channel(id("F/C")).preset, ChannelPreset::Telephone);
}

TEST(Scenario, SwissPresetMirrorsTheCantonTable)
{
  auto       sim    = build_scenario(fixture::scenario("swiss_preset"));
  auto const &tree  = sim.tree();
  auto const  swiss = core::swiss_tree();
  EXPECT_EQ(tree.children(tree.root()).size(), 26u);
  EXPECT_EQ(tree.total_weight_halves(), 46);
  for (auto const &canton : swiss.cantons())
  {
    ASSERT_TRUE(tree.contains(canton)) << canton.str();
    EXPECT_EQ(tree.weight(canton), swiss.weight(canton));
    EXPECT_EQ(tree.eligible(canton), swiss.eligible(canton));
    EXPECT_EQ(tree.display_name(canton), swiss.display_name(canton));
    EXPECT_EQ(sim.channel(canton).name, "Sedex");
  }
  EXPECT_EQ(sim.channel(id("CH/GE/Geneve")).preset, ChannelPreset::Telephone);
  EXPECT_EQ(sim.channel(id("CH/JU/Rest")).preset, ChannelPreset::Telephone);
  EXPECT_EQ(sim.channel(id("CH/BS/Basel")).preset, ChannelPreset::Email);
  EXPECT_EQ(sim.channel(id("CH/ZH/Zurich")).name, "Wabsti");
  auto const truth = sim.ground_truth_total();
  EXPECT_EQ(truth.yes, 1128522u);
  EXPECT_EQ(truth.no, 1124873u);
}

TEST(Scenario, ParsingDetails)
{
  auto c = fixture::parse(std::string{kBase} + R"(
scenario "two words"   # trailing comment
election e9
rule double
seed 5
seed 6
timing count=3 count_jitter=4 latency_jitter=5 postal=6
noise probability=0.5 magnitude=3
truth F/C/M yes=1 no=2 blank=3 invalid=4
attack tamper from=F/C/M mutation=shift:+7 first=2 election=e9
attack delay from=F/C hold=9
attack frontrun from=F/C/M forged=1,2 seq=4
secure mode=resign scheme=ed25519
)");
  EXPECT_EQ(c.name, "two words");
  EXPECT_EQ(c.election_id, "e9");
  EXPECT_EQ(c.rule, core::MajorityRule::DoubleMajority);
  EXPECT_EQ(c.seed, 6u);
  EXPECT_EQ(c.timing.count_time, 3);
  EXPECT_EQ(c.timing.postal_latency, 6);
  ASSERT_TRUE(c.noise);
  EXPECT_DOUBLE_EQ(c.noise->probability, 0.5);
  EXPECT_EQ(c.truths.at(0).counts, (VoteCount{1, 2, 3, 4}));
  ASSERT_EQ(c.attacks.size(), 3u);
  auto const &tamper = std::get<adversary::TamperParams>(c.attacks[0].spec.params);
  EXPECT_EQ(std::get<adversary::Shift>(tamper.mutation).delta, 7);
  EXPECT_EQ(c.attacks[0].spec.trigger.first_n, 2u);
  EXPECT_EQ(c.attacks[0].spec.target_edge.receiver, id("F/C"));
  EXPECT_EQ(std::get<adversary::DelayParams>(c.attacks[1].spec.params).hold_ticks, 9);
  auto const &fr = std::get<adversary::FrontRunParams>(c.attacks[2].spec.params);
  EXPECT_EQ(fr.forged, (VoteCount{1, 2, 0, 0}));
  EXPECT_EQ(fr.sequence_no, 4u);
  ASSERT_TRUE(c.secure);
  EXPECT_EQ(c.secure->mode, SigningMode::Resign);
  EXPECT_EQ(c.secure->scheme, "ed25519");
}

TEST(Scenario, ConfigErrorsNameTheLine)
{
  EXPECT_NE(config_error("node F\nnode F/A/B channel=x\n").find("inline:2"), std::string::npos);
  EXPECT_NE(config_error(std::string{kBase} + "truth F/C/M yes=1 no=1\nnode F/C channel=phone\n")
                .find("duplicate node"),
            std::string::npos);
  EXPECT_NE(config_error("node F\nnode F/A channel=nope\ntruth F/A yes=1 no=1\n").find("unknown channel"),
            std::string::npos);
  EXPECT_NE(config_error(kBase).find("has no truth"), std::string::npos);
  EXPECT_NE(config_error(std::string{kBase} + "truth F/C yes=1 no=1\n").find("not a leaf"),
            std::string::npos);
  EXPECT_NE(config_error("frobnicate\n").find("unknown directive"), std::string::npos);
  EXPECT_NE(config_error("seed twelve\n").find("inline:1"), std::string::npos);
  EXPECT_NE(config_error("scenario \"open\n").find("unterminated"), std::string::npos);
  EXPECT_NE(config_error("include does-not-exist.scenario\n").find("cannot open"), std::string::npos);
  EXPECT_NE(config_error("channel c preset=Telephone integrity=1\n").find("inline:1"),
            std::string::npos);
  EXPECT_NE(config_error("channel c preset=Pigeon\n").find("preset"), std::string::npos);
  EXPECT_NE(config_error(std::string{kBase} + "truth F/C/M yes=1 no=1\nattack tamper from=F/C/M mutation=flip-popular\n")
                .find("omniscient"),
            std::string::npos);
  EXPECT_NE(config_error("node F\nnode G\n").find("second root"), std::string::npos);
  EXPECT_NE(config_error(std::string{kBase} + "truth F/C/M yes=900 no=200\n").find("eligible"),
            std::string::npos);
  EXPECT_NE(config_error("node F\nnode F/A eligible=5 bogus=1\n").find("unknown option"),
            std::string::npos);
  EXPECT_NE(config_error(std::string{kBase} + "truth F/C/M yes=1 no=1\nattack tamper from=F/C/M to=F mutation=swap\n")
                .find("parent"),
            std::string::npos);
}

TEST(Scenario, OrphanIsRejected)
{
  EXPECT_THROW(build_tree(fixture::parse("node F\nnode F/A/B\n")), ConfigError);
}

TEST(Simulation, ConservationInEveryScenario)
{
  for (auto const &name : kScenarios)
  {
    auto sim   = build_scenario(fixture::scenario(name));
    auto truth = sim.ground_truth_total();
    auto trace = sim.run();
    auto tl    = publish_timeline(trace);
    ASSERT_FALSE(tl.empty()) << name;
    EXPECT_EQ(tl.back().kind, ReportKind::Final) << name;
    EXPECT_EQ(tl.back().totals, truth) << name;
    EXPECT_EQ(std::count_if(tl.begin(), tl.end(),
                            [](auto const &p) { return p.kind == ReportKind::Final; }),
              1)
        << name;
  }
}

TEST(Simulation, NoAttackLastPreliminaryEqualsFinal)
{
  for (auto const &name : {"minimal", "polarized", "swiss_preset"})
  {
    auto const tl = publish_timeline(fixture::run(fixture::scenario(name)));
    ASSERT_GE(tl.size(), 2u);
    EXPECT_EQ(tl[tl.size() - 2].kind, ReportKind::Preliminary);
    EXPECT_EQ(tl[tl.size() - 2].totals, tl.back().totals) << name;
  }
}

TEST(Simulation, DeterministicPerSeed)
{
  for (auto const &name : kScenarios)
  {
    auto const config = fixture::scenario(name);
    EXPECT_EQ(to_text(fixture::run(config)), to_text(fixture::run(config))) << name;
  }
}

TEST(Simulation, SeedsChangeTimingButNotFinals)
{
  auto const config   = fixture::scenario("swiss_preset");
  auto const baseline = publish_timeline(fixture::run(config, 1));
  bool       differs  = false;
  for (std::uint64_t seed = 2; seed < 12; ++seed)
  {
    auto const tl = publish_timeline(fixture::run(config, seed));
    EXPECT_EQ(tl.back().totals, baseline.back().totals);
    differs = differs || tl != baseline;
  }
  EXPECT_TRUE(differs);
}

TEST(Simulation, EagerForwardingWithinTheSameTick)
{
  for (auto const &name : kScenarios)
  {
    auto const  trace = fixture::run(fixture::scenario(name));
    auto const &recs  = trace.records;
    for (std::size_t i = 0; i < recs.size(); ++i)
    {
      auto const *d = std::get_if<DeliverRecord>(&recs[i]);
      if (!d || !d->accepted || d->report.kind != ReportKind::Preliminary)
      {
        continue;
      }
      // The reaction is the next non-detect record: an emission by the
      // receiver, or a publication at the root.
      std::size_t j = i + 1;
      ASSERT_LT(j, recs.size());
      if (d->edge.receiver == trace.root)
      {
        auto const *p = std::get_if<PublishRecord>(&recs[j]);
        ASSERT_NE(p, nullptr) << name;
        EXPECT_EQ(p->time, d->time);
      }
      else
      {
        auto const *e = std::get_if<EmitRecord>(&recs[j]);
        ASSERT_NE(e, nullptr) << name;
        EXPECT_EQ(e->node, d->edge.receiver);
        EXPECT_EQ(e->time, d->time);
        EXPECT_EQ(e->report.kind, ReportKind::Preliminary);
      }
    }
  }
}

TEST(Simulation, StragglerRule)
{
  for (auto const &name : kScenarios)
  {
    auto const sim_config = fixture::scenario(name);
    auto       sim        = build_scenario(sim_config);
    auto const tree       = sim.tree();
    auto const trace      = sim.run();
    std::map<JurisdictionId, std::set<JurisdictionId>> finals_in;
    for (auto const &r : trace.records)
    {
      if (auto const *d = std::get_if<DeliverRecord>(&r); d && d->report.kind == ReportKind::Final)
      {
        finals_in[d->edge.receiver].insert(d->edge.sender);
      }
      auto const *e = std::get_if<EmitRecord>(&r);
      if (e && e->report.kind == ReportKind::Final && !tree.is_leaf(e->node))
      {
        EXPECT_EQ(finals_in[e->node].size(), tree.children(e->node).size()) << name;
      }
      auto const *p = std::get_if<PublishRecord>(&r);
      if (p && p->kind == ReportKind::Final)
      {
        EXPECT_EQ(finals_in[tree.root()].size(), tree.children(tree.root()).size());
      }
    }
  }
}

TEST(Simulation, MonotonePublicationCoverage)
{
  for (auto const &name : kScenarios)
  {
    auto const                trace = fixture::run(fixture::scenario(name));
    std::set<JurisdictionId>  seen;
    std::size_t               leaves = 0;
    for (auto const &p : fixture::records_of<PublishRecord>(trace))
    {
      if (p.kind != ReportKind::Preliminary)
      {
        continue;
      }
      for (auto const &child : seen)
      {
        EXPECT_TRUE(p.parts.contains(child)) << name << " dropped " << child.str();
      }
      for (auto const &[child, c] : p.parts)
      {
        seen.insert(child);
      }
      EXPECT_GE(p.leaves_covered, leaves);
      leaves = p.leaves_covered;
    }
  }
}

TEST(Simulation, RunOnlyOnce)
{
  auto sim = build_scenario(fixture::scenario("minimal"));
  sim.run();
  EXPECT_THROW(sim.run(), std::logic_error);
}

TEST(Simulation, NoiseTouchesOnlyPreliminaries)
{
  auto config  = fixture::scenario("polarized");
  config.noise = NoiseModel{1.0, 40};
  auto sim     = build_scenario(config);
  auto truth   = sim.ground_truth_total();
  auto trace   = sim.run();
  auto tl      = publish_timeline(trace);
  EXPECT_EQ(tl.back().totals, truth);
  bool noisy = false;
  for (auto const &p : fixture::records_of<PublishRecord>(trace))
  {
    noisy = noisy || (p.kind == ReportKind::Preliminary && p.totals != p.truth);
  }
  EXPECT_TRUE(noisy);
}

TEST(Trace, HeaderAndRecordShapes)
{
  auto const text = to_text(fixture::run(fixture::scenario("minimal")));
  EXPECT_EQ(text.rfind("# prelimsim trace v1\n# scenario=minimal election=e1 seed=1 root=F leaves=1\n", 0), 0u);
  EXPECT_NE(text.find("emit t=10 node=F/C/M kind=Preliminary seq=1 yes=300 no=500 blank=10 invalid=0\n"),
            std::string::npos);
  EXPECT_NE(text.find("publish t=20 kind=Preliminary children=1 leaves=1/1 yes=300 no=500"),
            std::string::npos);
  EXPECT_NE(text.find("publish t=210 kind=Final"), std::string::npos);
}

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

#include "prelim/simnet/simulation.hpp"

#include "prelim/core/errors.hpp"
#include "prelim/core/flips.hpp"
#include "prelim/secauth/pki.hpp"
#include "prelim/secauth/signed_report.hpp"
#include "prelim/simnet/node.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace prelim::simnet {
namespace {

using core::JurisdictionId;
using core::VoteCount;

// A preliminary report in flight plus what the trace needs to judge it.
// Nodes never look at `covered` or `truth`.
struct Envelope
{
  Report                                   report;
  Origin                                   origin = Origin::Genuine;
  std::set<JurisdictionId>                 covered;
  VoteCount                                truth;
  std::optional<secauth::SignedReport>     sealed;
  std::vector<secauth::SignedReport>       relayed;
};

struct LeafCount
{
  JurisdictionId leaf;
};

struct DeliverPrelim
{
  Edge     edge;
  Envelope envelope;
};

struct DeliverFinal
{
  Edge   edge;
  Report report;
};

struct Event
{
  Tick                                                 time = 0;
  std::uint64_t                                        seq  = 0;
  std::variant<LeafCount, DeliverPrelim, DeliverFinal> payload;
};

struct Later
{
  bool operator()(Event const &a, Event const &b) const noexcept
  {
    return std::tie(a.time, a.seq) > std::tie(b.time, b.seq);
  }
};

struct ChildView
{
  std::set<JurisdictionId>             covered;
  VoteCount                            truth;
  std::optional<secauth::SignedReport> sealed;
};

DetectReason to_reason(FeasibilityFailure f)
{
  switch (f)
  {
  case FeasibilityFailure::OverEligible:
    return DetectReason::OverEligible;
  case FeasibilityFailure::StaleSequence:
    return DetectReason::StaleSequence;
  case FeasibilityFailure::UnknownSender:
    return DetectReason::UnknownSender;
  }
  return DetectReason::UnknownSender;
}

std::string located(std::string const &source, std::size_t line, std::string const &message)
{
  if (source.empty())
  {
    return message;
  }
  return source + ":" + std::to_string(line) + ": " + message;
}

}  // namespace

struct Simulation::Impl
{
  ScenarioConfig                                  config;
  core::JurisdictionTree                          tree;
  std::uint64_t                                   seed = 0;
  std::map<JurisdictionId, ChannelSpec>           channels;
  ChannelSpec                                     postal;
  std::map<JurisdictionId, VoteCount>             truths;
  adversary::Adversary                            adversary;
  std::optional<secauth::Pki>                     pki;
  secauth::RevocationList                         crl;
  SigningMode                                     mode = SigningMode::RelayAndCountersign;

  std::map<JurisdictionId, NodeState>                            states;
  std::map<JurisdictionId, std::map<JurisdictionId, ChildView>>  views;
  std::map<JurisdictionId, secauth::SequenceState>               seq_states;
  std::priority_queue<Event, std::vector<Event>, Later>          queue;
  std::uint64_t                                                  next_event = 0;
  std::mt19937_64                                                rng;
  EventTrace                                                     trace;
  bool                                                           ran = false;

  Impl(ScenarioConfig cfg, core::JurisdictionTree t)
    : config{std::move(cfg)}
    , tree{std::move(t)}
  {}

  Tick draw(Tick range)
  {
    if (range <= 0)
    {
      return 0;
    }
    return static_cast<Tick>(rng() % (static_cast<std::uint64_t>(range) + 1));
  }

  double uniform()
  {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

  void schedule(Tick time, std::variant<LeafCount, DeliverPrelim, DeliverFinal> payload)
  {
    queue.push(Event{time, next_event++, std::move(payload)});
  }

  VoteCount noisy(VoteCount counts)
  {
    if (!config.noise || config.noise->magnitude == 0)
    {
      return counts;
    }
    if (uniform() >= config.noise->probability)
    {
      return counts;
    }
    auto const m     = static_cast<Tick>(config.noise->magnitude);
    auto const dyes  = draw(2 * m) - m;
    auto const dno   = draw(2 * m) - m;
    auto       apply = [](std::uint64_t v, Tick d) {
      if (d < 0 && static_cast<std::uint64_t>(-d) > v)
      {
        return std::uint64_t{0};
      }
      return static_cast<std::uint64_t>(static_cast<Tick>(v) + d);
    };
    counts.yes = apply(counts.yes, dyes);
    counts.no  = apply(counts.no, dno);
    return counts;
  }

  Report new_report(NodeState &state, VoteCount const &counts, ReportKind kind, Tick now)
  {
    Report r;
    r.election_id = config.election_id;
    r.sender      = state.id;
    r.sequence_no = state.next_seq++;
    r.counts      = counts;
    r.kind        = kind;
    r.emitted_at  = now;
    return r;
  }

  void emit_record(Tick now, Report const &r)
  {
    trace.records.emplace_back(EmitRecord{now, r.sender, r});
  }

  void send_prelim(Envelope env, Tick now)
  {
    auto const &sender = env.report.sender;
    Edge const  edge{sender, *tree.parent(sender)};
    auto const &channel = channels.at(sender);

    if (pki)
    {
      env.sealed = secauth::sign_report(pki->keys.at(sender), pki->chain_for(sender), env.report);
    }

    auto const deliver_at = now + channel.base_latency + draw(config.timing.latency_jitter);
    std::vector<adversary::AttackAction> actions;
    auto transmissions = adversary.intercept(edge, channel, env.report, now, deliver_at, actions);
    for (auto const &a : actions)
    {
      trace.records.emplace_back(AttackRecord{now, a.attack, a.kind, edge, a.omniscient, a.action});
    }
    for (auto &tx : transmissions)
    {
      Envelope copy = env;
      copy.origin   = tx.origin;
      copy.report   = tx.report;
      if (copy.sealed)
      {
        // The signature stays as it was; an altered report no longer matches it.
        copy.sealed->report = tx.report;
      }
      schedule(tx.deliver_at, DeliverPrelim{edge, std::move(copy)});
    }
  }

  void send_final(Report const &report, Tick now)
  {
    Edge const edge{report.sender, *tree.parent(report.sender)};
    auto const at = now + postal.base_latency + draw(config.timing.latency_jitter);
    schedule(at, DeliverFinal{edge, report});
  }

  void on_leaf_count(LeafCount const &ev, Tick now)
  {
    auto &state = states.at(ev.leaf);
    auto const &truth = truths.at(ev.leaf);

    Envelope env;
    env.report  = new_report(state, noisy(truth), ReportKind::Preliminary, now);
    env.covered = {ev.leaf};
    env.truth   = truth;
    emit_record(now, env.report);
    send_prelim(std::move(env), now);

    auto final_report = new_report(state, truth, ReportKind::Final, now);
    state.final_emitted = true;
    emit_record(now, final_report);
    send_final(final_report, now);
  }

  // Secure-mode checks before the feasibility check. Returns false when the
  // report must be discarded.
  bool verify_sealed(Envelope const &env, JurisdictionId const &receiver, Tick now,
                     std::vector<DetectRecord> &detections)
  {
    auto const &r = env.report;
    if (!env.sealed)
    {
      detections.push_back({now, receiver, r.sender, DetectReason::SignatureRejected,
                            r.sequence_no, "unsigned"});
      return false;
    }
    auto const verdict = secauth::verify_report(*env.sealed, pki->root, crl,
                                                seq_states[receiver], config.election_id);
    if (auto const *rej = std::get_if<secauth::Reject>(&verdict))
    {
      auto const reason = rej->reason == secauth::RejectReason::Replay
                              ? DetectReason::StaleSequence
                              : DetectReason::SignatureRejected;
      detections.push_back(
          {now, receiver, r.sender, reason, r.sequence_no, secauth::to_string(rej->reason)});
      return false;
    }
    if (mode != SigningMode::RelayAndCountersign || tree.is_leaf(r.sender))
    {
      return true;
    }

    std::vector<VoteCount>   parts;
    std::set<JurisdictionId> seen;
    for (auto const &child : env.relayed)
    {
      auto const v = secauth::verify_authenticity(child, pki->root, crl, config.election_id);
      if (!secauth::accepted(v))
      {
        detections.push_back({now, receiver, r.sender, DetectReason::RelayMismatch,
                              r.sequence_no,
                              std::string{"relayed report of "} + child.report.sender.str() +
                                  ": " + secauth::to_string(std::get<secauth::Reject>(v).reason)});
        return false;
      }
      if (tree.parent(child.report.sender) != r.sender || !seen.insert(child.report.sender).second)
      {
        detections.push_back({now, receiver, r.sender, DetectReason::RelayMismatch,
                              r.sequence_no, "relayed report from " + child.report.sender.str()});
        return false;
      }
      parts.push_back(child.report.counts);
    }
    if (core::accumulate(parts) != r.counts)
    {
      detections.push_back({now, receiver, r.sender, DetectReason::RelayMismatch, r.sequence_no,
                            "signed total differs from the relayed reports"});
      return false;
    }
    return true;
  }

  void on_deliver_prelim(DeliverPrelim &ev, Tick now)
  {
    auto const &receiver = ev.edge.receiver;
    auto       &env      = ev.envelope;
    auto       &state    = states.at(receiver);

    std::vector<DetectRecord> detections;
    bool ok = !pki || verify_sealed(env, receiver, now, detections);

    PreliminaryResult result;
    if (ok)
    {
      result = node_receive_preliminary(state, env.report, channels.at(env.report.sender), tree,
                                        now);
      if (result.failure)
      {
        ok = false;
        detections.push_back({now, receiver, env.report.sender, to_reason(*result.failure),
                              env.report.sequence_no, {}});
      }
    }

    trace.records.emplace_back(DeliverRecord{now, ev.edge, env.report, env.origin, ok});
    for (auto &d : detections)
    {
      trace.records.emplace_back(std::move(d));
    }
    if (!ok)
    {
      return;
    }

    auto &view = views[receiver];
    view[env.report.sender] = ChildView{env.covered, env.truth, env.sealed};

    Envelope up;
    up.report = std::move(*result.forwarded);
    std::vector<VoteCount> truths_seen;
    for (auto const &[child, v] : view)
    {
      up.covered.insert(v.covered.begin(), v.covered.end());
      truths_seen.push_back(v.truth);
      if (pki && mode == SigningMode::RelayAndCountersign && v.sealed)
      {
        up.relayed.push_back(*v.sealed);
      }
    }
    up.truth = core::accumulate(truths_seen);

    if (receiver == tree.root())
    {
      PublishRecord p;
      p.time           = now;
      p.kind           = ReportKind::Preliminary;
      p.totals         = up.report.counts;
      p.truth          = up.truth;
      p.leaves_covered = up.covered.size();
      p.leaves_total   = trace.leaves_total;
      for (auto const &[child, r] : state.received_prelim)
      {
        p.parts.emplace(child, r.counts);
      }
      trace.records.emplace_back(std::move(p));
      return;
    }
    emit_record(now, up.report);
    send_prelim(std::move(up), now);
  }

  void on_deliver_final(DeliverFinal const &ev, Tick now)
  {
    auto const &receiver = ev.edge.receiver;
    auto       &state    = states.at(receiver);
    trace.records.emplace_back(DeliverRecord{now, ev.edge, ev.report, Origin::Genuine, true});

    auto up = node_receive_final(state, ev.report, tree, now);
    if (!up)
    {
      return;
    }
    if (receiver == tree.root())
    {
      PublishRecord p;
      p.time           = now;
      p.kind           = ReportKind::Final;
      p.totals         = up->counts;
      p.truth          = ground_truth_total();
      p.leaves_covered = trace.leaves_total;
      p.leaves_total   = trace.leaves_total;
      for (auto const &[child, r] : state.received_final)
      {
        p.parts.emplace(child, r.counts);
      }
      trace.records.emplace_back(std::move(p));
      return;
    }
    emit_record(now, *up);
    send_final(*up, now);
  }

  VoteCount ground_truth_total() const
  {
    std::vector<VoteCount> all;
    all.reserve(truths.size());
    for (auto const &[leaf, c] : truths)
    {
      all.push_back(c);
    }
    return core::accumulate(all);
  }

  EventTrace run()
  {
    if (ran)
    {
      throw std::logic_error{"Simulation::run called twice"};
    }
    ran = true;
    while (!queue.empty())
    {
      Event ev = queue.top();
      queue.pop();
      std::visit(
          [&](auto &payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, LeafCount>)
            {
              on_leaf_count(payload, ev.time);
            }
            else if constexpr (std::is_same_v<T, DeliverPrelim>)
            {
              on_deliver_prelim(payload, ev.time);
            }
            else
            {
              on_deliver_final(payload, ev.time);
            }
          },
          ev.payload);
    }
    return std::move(trace);
  }
};

Simulation::Simulation(std::unique_ptr<Impl> impl)
  : impl_{std::move(impl)}
{}

Simulation::Simulation(Simulation &&) noexcept            = default;
Simulation &Simulation::operator=(Simulation &&) noexcept = default;
Simulation::~Simulation()                                 = default;

ScenarioConfig const &Simulation::config() const
{
  return impl_->config;
}

core::JurisdictionTree const &Simulation::tree() const
{
  return impl_->tree;
}

std::uint64_t Simulation::seed() const
{
  return impl_->seed;
}

std::size_t Simulation::edge_count() const
{
  return impl_->tree.size() - 1;
}

ChannelSpec const &Simulation::channel(core::JurisdictionId const &sender) const
{
  auto it = impl_->channels.find(sender);
  if (it == impl_->channels.end())
  {
    throw std::out_of_range{"no channel leaves " + sender.str()};
  }
  return it->second;
}

core::VoteCount Simulation::ground_truth_total() const
{
  return impl_->ground_truth_total();
}

EventTrace Simulation::run()
{
  return impl_->run();
}

Simulation build_scenario(ScenarioConfig const &config, std::optional<std::uint64_t> seed)
{
  auto impl  = std::make_unique<Simulation::Impl>(config, build_tree(config));
  auto &tree = impl->tree;
  impl->seed = seed.value_or(config.seed);
  impl->rng.seed(impl->seed);
  if (tree.is_leaf(tree.root()))
  {
    throw ConfigError{"the tree has no edges", config.source};
  }
  impl->postal = preset_channel(ChannelPreset::PostalFinal, "postal",
                                config.timing.postal_latency);

  for (auto const &n : config.nodes)
  {
    if (n.id == tree.root())
    {
      if (n.channel)
      {
        throw ConfigError{"the root has no outgoing channel", n.source, n.line};
      }
      continue;
    }
    if (!n.channel)
    {
      throw ConfigError{"node " + n.id.str() + " has no channel", n.source, n.line};
    }
    auto it = config.channels.find(*n.channel);
    if (it == config.channels.end())
    {
      throw ConfigError{"unknown channel '" + *n.channel + "'", n.source, n.line};
    }
    if (!carries(it->second, ReportKind::Preliminary))
    {
      throw ConfigError{"channel '" + *n.channel + "' cannot carry preliminary reports",
                        n.source, n.line};
    }
    impl->channels.emplace(n.id, it->second);
  }

  for (auto const &t : config.truths)
  {
    if (!tree.contains(t.id) || !tree.is_leaf(t.id))
    {
      throw ConfigError{"truth for " + t.id.str() + ", which is not a leaf", t.source, t.line};
    }
    if (!impl->truths.emplace(t.id, t.counts).second)
    {
      throw ConfigError{"second truth for " + t.id.str(), t.source, t.line};
    }
    auto const eligible = tree.eligible(t.id);
    if (eligible && t.counts.total() > *eligible)
    {
      throw ConfigError{"truth for " + t.id.str() + " exceeds its eligible voters", t.source,
                        t.line};
    }
  }
  auto const leaves = tree.leaves();
  for (auto const &leaf : leaves)
  {
    if (!impl->truths.contains(leaf))
    {
      throw ConfigError{"leaf " + leaf.str() + " has no truth", config.source};
    }
  }

  if (config.secure)
  {
    auto const *scheme = secauth::scheme_by_name(config.secure->scheme);
    if (!scheme)
    {
      throw ConfigError{"unknown signature scheme '" + config.secure->scheme + "'",
                        config.source};
    }
    impl->mode = config.secure->mode;
    impl->pki  = secauth::bootstrap_pki(tree, *scheme, impl->seed);
    for (auto &[sender, channel] : impl->channels)
    {
      channel = secauth::wrap_channel(channel, *impl->pki, Edge{sender, *tree.parent(sender)});
    }
  }

  std::vector<adversary::AttackSpec> specs;
  for (auto const &a : config.attacks)
  {
    auto spec = a.spec;
    auto const &sender = spec.target_edge.sender;
    if (!tree.contains(sender) || sender == tree.root())
    {
      throw ConfigError{"attack on unknown edge " + spec.target_edge.str(), a.source, a.line};
    }
    if (a.flip_popular)
    {
      auto const total  = impl->ground_truth_total();
      auto const target = core::opposite(core::popular_outcome(total));
      auto const plan   = core::min_flips_popular(total, target);
      auto const k      = static_cast<std::int64_t>(plan.total_flips);
      spec.params = adversary::TamperParams{
          adversary::Shift{target == core::Decision::Accepted ? k : -k}};
    }
    try
    {
      adversary::check_capability(spec, impl->channels.at(sender));
    }
    catch (CapabilityError const &e)
    {
      throw CapabilityError{located(a.source, a.line, e.what())};
    }
    specs.push_back(std::move(spec));
  }
  impl->adversary = adversary::Adversary{std::move(specs)};

  for (auto const &id : tree.nodes())
  {
    NodeState s;
    s.id = id;
    if (tree.is_leaf(id))
    {
      s.ground_truth = impl->truths.at(id);
    }
    impl->states.emplace(id, std::move(s));
  }

  auto &trace        = impl->trace;
  trace.scenario     = config.name;
  trace.election_id  = config.election_id;
  trace.seed         = impl->seed;
  trace.root         = tree.root();
  trace.root_children = tree.children(tree.root());
  trace.leaves_total = leaves.size();

  for (auto const &leaf : leaves)
  {
    impl->schedule(config.timing.count_time + impl->draw(config.timing.count_jitter),
                   LeafCount{leaf});
  }
  return Simulation{std::move(impl)};
}

EventTrace run(Simulation &sim)
{
  return sim.run();
}

}  // namespace prelim::simnet

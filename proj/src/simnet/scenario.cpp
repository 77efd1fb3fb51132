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

#include "prelim/simnet/scenario.hpp"

#include "prelim/core/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prelim::simnet {
namespace {

constexpr int kMaxIncludeDepth = 16;

struct Directive
{
  std::string                        source;
  std::size_t                        line = 0;
  std::string                        name;
  std::vector<std::string>           positional;
  std::map<std::string, std::string> options;
  std::set<std::string>              used;

  [[noreturn]] void fail(std::string const &message) const
  {
    throw ConfigError{message, source, line};
  }

  std::optional<std::string> take(std::string const &key)
  {
    auto it = options.find(key);
    if (it == options.end())
    {
      return std::nullopt;
    }
    used.insert(key);
    return it->second;
  }

  std::string require(std::string const &key)
  {
    auto v = take(key);
    if (!v)
    {
      fail(name + ": missing " + key + "=");
    }
    return *v;
  }

  void require_positional(std::size_t n, char const *what)
  {
    if (positional.size() != n)
    {
      fail(name + ": expected " + what);
    }
  }

  // Every option must have been consumed by the handler.
  void finish() const
  {
    for (auto const &[k, v] : options)
    {
      if (!used.contains(k))
      {
        fail(name + ": unknown option '" + k + "'");
      }
    }
  }
};

std::vector<std::string> tokenize(std::string_view line, std::string const &source,
                                  std::size_t line_no)
{
  std::vector<std::string> tokens;
  std::string              current;
  bool                     in_token = false;
  bool                     quoted   = false;
  for (std::size_t i = 0; i < line.size(); ++i)
  {
    char const c = line[i];
    if (quoted)
    {
      if (c == '\\' && i + 1 < line.size())
      {
        current += line[++i];
      }
      else if (c == '"')
      {
        quoted = false;
      }
      else
      {
        current += c;
      }
      continue;
    }
    if (c == '#')
    {
      break;
    }
    if (c == ' ' || c == '\t' || c == '\r')
    {
      if (in_token)
      {
        tokens.push_back(std::move(current));
        current.clear();
        in_token = false;
      }
      continue;
    }
    in_token = true;
    if (c == '"')
    {
      quoted = true;
    }
    else
    {
      current += c;
    }
  }
  if (quoted)
  {
    throw ConfigError{"unterminated quote", source, line_no};
  }
  if (in_token)
  {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

std::uint64_t to_u64(Directive const &d, std::string const &what, std::string const &s)
{
  std::uint64_t v   = 0;
  auto          res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
  {
    d.fail(what + ": not a nonnegative integer: '" + s + "'");
  }
  return v;
}

std::int64_t to_i64(Directive const &d, std::string const &what, std::string const &s)
{
  std::string_view sv = s;
  if (!sv.empty() && sv.front() == '+')
  {
    sv.remove_prefix(1);
  }
  std::int64_t v   = 0;
  auto         res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size())
  {
    d.fail(what + ": not an integer: '" + s + "'");
  }
  return v;
}

Tick to_ticks(Directive const &d, std::string const &what, std::string const &s)
{
  auto const v = to_i64(d, what, s);
  if (v < 0)
  {
    d.fail(what + ": must not be negative");
  }
  return v;
}

bool to_flag(Directive const &d, std::string const &what, std::string const &s)
{
  if (s == "1" || s == "true")
  {
    return true;
  }
  if (s == "0" || s == "false")
  {
    return false;
  }
  d.fail(what + ": expected 0 or 1, got '" + s + "'");
}

core::JurisdictionId to_path(Directive const &d, std::string const &s)
{
  try
  {
    return core::JurisdictionId::parse(s);
  }
  catch (std::invalid_argument const &e)
  {
    d.fail(std::string{"bad jurisdiction path '"} + s + "': " + e.what());
  }
}

std::string checked_id(Directive const &d, std::string const &s)
{
  if (s.empty() || s.find('=') != std::string::npos)
  {
    d.fail("identifier must be nonempty and must not contain '='");
  }
  return s;
}

// "y,n" or "y,n,b,i"
core::VoteCount to_counts(Directive const &d, std::string const &what, std::string const &s)
{
  std::vector<std::string> parts;
  std::stringstream        ss{s};
  std::string              item;
  while (std::getline(ss, item, ','))
  {
    parts.push_back(item);
  }
  if (parts.size() != 2 && parts.size() != 4)
  {
    d.fail(what + ": expected yes,no or yes,no,blank,invalid");
  }
  core::VoteCount c;
  c.yes = to_u64(d, what, parts[0]);
  c.no  = to_u64(d, what, parts[1]);
  if (parts.size() == 4)
  {
    c.blank   = to_u64(d, what, parts[2]);
    c.invalid = to_u64(d, what, parts[3]);
  }
  return c;
}

adversary::Trigger to_trigger(Directive &d)
{
  adversary::Trigger t;
  if (auto first = d.take("first"))
  {
    t.first_n = to_u64(d, "first", *first);
  }
  if (auto e = d.take("election"))
  {
    t.election_id = checked_id(d, *e);
  }
  return t;
}

class Parser
{
public:
  explicit Parser(ScenarioConfig &config)
    : config_{config}
  {}

  void parse(std::string_view text, std::string const &source,
             std::filesystem::path const &base_dir, int depth)
  {
    if (depth > kMaxIncludeDepth)
    {
      throw ConfigError{"include nesting too deep", source};
    }
    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size())
    {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos)
      {
        end = text.size();
      }
      ++line_no;
      handle_line(text.substr(start, end - start), source, line_no, base_dir, depth);
      start = end + 1;
    }
  }

private:
  void handle_line(std::string_view raw, std::string const &source, std::size_t line_no,
                   std::filesystem::path const &base_dir, int depth)
  {
    auto tokens = tokenize(raw, source, line_no);
    if (tokens.empty())
    {
      return;
    }
    Directive d;
    d.source = source;
    d.line   = line_no;
    d.name   = tokens.front();
    for (std::size_t i = 1; i < tokens.size(); ++i)
    {
      auto const eq = tokens[i].find('=');
      if (eq == std::string::npos)
      {
        d.positional.push_back(tokens[i]);
        continue;
      }
      auto key = tokens[i].substr(0, eq);
      if (!d.options.emplace(key, tokens[i].substr(eq + 1)).second)
      {
        d.fail("duplicate option '" + key + "'");
      }
    }

    if (d.name == "include")
    {
      d.require_positional(1, "a file name");
      auto path = base_dir / d.positional.front();
      std::ifstream in{path};
      if (!in)
      {
        d.fail("cannot open included file " + path.string());
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      parse(buffer.str(), path.string(), path.parent_path(), depth + 1);
    }
    else if (d.name == "scenario")
    {
      d.require_positional(1, "a name");
      config_.name = checked_id(d, d.positional.front());
    }
    else if (d.name == "election")
    {
      d.require_positional(1, "an election id");
      config_.election_id = checked_id(d, d.positional.front());
    }
    else if (d.name == "rule")
    {
      d.require_positional(1, "popular or double");
      auto const &r = d.positional.front();
      if (r == "popular")
      {
        config_.rule = core::MajorityRule::PopularOnly;
      }
      else if (r == "double")
      {
        config_.rule = core::MajorityRule::DoubleMajority;
      }
      else
      {
        d.fail("rule must be popular or double");
      }
    }
    else if (d.name == "seed")
    {
      d.require_positional(1, "a seed");
      config_.seed = to_u64(d, "seed", d.positional.front());
    }
    else if (d.name == "timing")
    {
      d.require_positional(0, "only key=value options");
      if (auto v = d.take("count"))
      {
        config_.timing.count_time = to_ticks(d, "count", *v);
      }
      if (auto v = d.take("count_jitter"))
      {
        config_.timing.count_jitter = to_ticks(d, "count_jitter", *v);
      }
      if (auto v = d.take("latency_jitter"))
      {
        config_.timing.latency_jitter = to_ticks(d, "latency_jitter", *v);
      }
      if (auto v = d.take("postal"))
      {
        config_.timing.postal_latency = to_ticks(d, "postal", *v);
      }
    }
    else if (d.name == "channel")
    {
      channel(d);
    }
    else if (d.name == "node")
    {
      node(d);
    }
    else if (d.name == "truth")
    {
      truth(d);
    }
    else if (d.name == "attack")
    {
      attack(d);
    }
    else if (d.name == "noise")
    {
      d.require_positional(0, "only key=value options");
      NoiseModel n;
      auto       p = d.require("probability");
      char      *end = nullptr;
      n.probability  = std::strtod(p.c_str(), &end);
      if (end != p.c_str() + p.size() || !(n.probability >= 0.0 && n.probability <= 1.0))
      {
        d.fail("noise probability must be in [0, 1]");
      }
      n.magnitude   = to_u64(d, "magnitude", d.require("magnitude"));
      config_.noise = n;
    }
    else if (d.name == "secure")
    {
      d.require_positional(0, "only key=value options");
      SecureDecl s;
      if (auto m = d.take("mode"))
      {
        if (*m == "relay")
        {
          s.mode = SigningMode::RelayAndCountersign;
        }
        else if (*m == "resign")
        {
          s.mode = SigningMode::Resign;
        }
        else
        {
          d.fail("secure mode must be relay or resign");
        }
      }
      if (auto sc = d.take("scheme"))
      {
        s.scheme = *sc;
      }
      config_.secure = s;
    }
    else
    {
      d.fail("unknown directive '" + d.name + "'");
    }
    d.finish();
  }

  void channel(Directive &d)
  {
    d.require_positional(1, "a channel name");
    auto const &name   = d.positional.front();
    auto        preset = parse_channel_preset(d.require("preset"));
    if (!preset)
    {
      d.fail("unknown channel preset");
    }
    Tick latency = 1;
    if (auto v = d.take("latency"))
    {
      latency = to_ticks(d, "latency", *v);
    }
    auto spec = preset_channel(*preset, checked_id(d, name), latency);
    if (auto v = d.take("integrity"))
    {
      spec.integrity = to_flag(d, "integrity", *v);
    }
    if (auto v = d.take("authenticity"))
    {
      spec.authenticity = to_flag(d, "authenticity", *v);
    }
    if (auto v = d.take("delayable"))
    {
      spec.delayable = to_flag(d, "delayable", *v);
    }
    try
    {
      validate_channel(spec);
    }
    catch (ConfigError const &e)
    {
      d.fail(e.what());
    }
    if (!config_.channels.emplace(name, spec).second)
    {
      d.fail("duplicate channel '" + name + "'");
    }
  }

  void node(Directive &d)
  {
    d.require_positional(1, "a jurisdiction path");
    NodeDecl n;
    n.id     = to_path(d, d.positional.front());
    n.source = d.source;
    n.line   = d.line;
    if (auto v = d.take("eligible"))
    {
      n.eligible = to_u64(d, "eligible", *v);
    }
    if (auto v = d.take("weight"))
    {
      if (*v == "1" || *v == "1.0")
      {
        n.weight = core::CantonWeight::full();
      }
      else if (*v == "0.5" || *v == ".5")
      {
        n.weight = core::CantonWeight::half();
      }
      else
      {
        d.fail("weight must be 1 or 0.5");
      }
    }
    n.display_name = d.take("name");
    n.channel      = d.take("channel");
    config_.nodes.push_back(std::move(n));
  }

  void truth(Directive &d)
  {
    d.require_positional(1, "a jurisdiction path");
    TruthDecl t;
    t.id         = to_path(d, d.positional.front());
    t.source     = d.source;
    t.line       = d.line;
    t.counts.yes = to_u64(d, "yes", d.require("yes"));
    t.counts.no  = to_u64(d, "no", d.require("no"));
    if (auto v = d.take("blank"))
    {
      t.counts.blank = to_u64(d, "blank", *v);
    }
    if (auto v = d.take("invalid"))
    {
      t.counts.invalid = to_u64(d, "invalid", *v);
    }
    config_.truths.push_back(std::move(t));
  }

  void attack(Directive &d)
  {
    if (d.positional.empty())
    {
      d.fail("attack: expected tamper, delay or frontrun");
    }
    auto const kind = d.positional.front();
    bool       omniscient = false;
    for (std::size_t i = 1; i < d.positional.size(); ++i)
    {
      if (d.positional[i] != "omniscient")
      {
        d.fail("attack: unexpected '" + d.positional[i] + "'");
      }
      omniscient = true;
    }

    AttackDecl a;
    a.source              = d.source;
    a.line                = d.line;
    a.spec.omniscient     = omniscient;
    a.spec.target_edge.sender = to_path(d, d.require("from"));
    if (a.spec.target_edge.sender.depth() == 0)
    {
      d.fail("attack: the root has no outgoing edge");
    }
    a.spec.target_edge.receiver = a.spec.target_edge.sender.parent();
    if (auto to = d.take("to"))
    {
      if (to_path(d, *to) != a.spec.target_edge.receiver)
      {
        d.fail("attack: 'to' must be the parent of 'from'");
      }
    }
    a.spec.trigger = to_trigger(d);

    if (kind == "tamper")
    {
      a.spec.kind   = adversary::AttackKind::Tamper;
      auto const m  = d.require("mutation");
      adversary::Mutation mutation;
      if (m == "swap")
      {
        mutation = adversary::SwapYesNo{};
      }
      else if (m == "flip-popular")
      {
        if (!omniscient)
        {
          d.fail("attack: mutation=flip-popular reads the ground truth and needs 'omniscient'");
        }
        a.flip_popular = true;
        mutation       = adversary::Shift{0};
      }
      else if (m.starts_with("shift:"))
      {
        mutation = adversary::Shift{to_i64(d, "shift", m.substr(6))};
      }
      else if (m.starts_with("set:"))
      {
        mutation = adversary::SetCounts{to_counts(d, "set", m.substr(4))};
      }
      else
      {
        d.fail("attack: mutation must be swap, shift:<n>, set:<counts> or flip-popular");
      }
      a.spec.params = adversary::TamperParams{mutation};
    }
    else if (kind == "delay")
    {
      a.spec.kind   = adversary::AttackKind::Delay;
      a.spec.params = adversary::DelayParams{to_ticks(d, "hold", d.require("hold"))};
    }
    else if (kind == "frontrun")
    {
      a.spec.kind = adversary::AttackKind::FrontRun;
      adversary::FrontRunParams p;
      p.forged = to_counts(d, "forged", d.require("forged"));
      if (auto v = d.take("seq"))
      {
        p.sequence_no = to_u64(d, "seq", *v);
      }
      if (auto v = d.take("offset"))
      {
        if (p.sequence_no)
        {
          d.fail("attack: give either seq= or offset=");
        }
        p.sequence_offset = to_u64(d, "offset", *v);
      }
      a.spec.params = p;
    }
    else
    {
      d.fail("attack: expected tamper, delay or frontrun");
    }
    config_.attacks.push_back(std::move(a));
  }

  ScenarioConfig &config_;
};

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, std::string const &source,
                              std::filesystem::path const &base_dir)
{
  ScenarioConfig config;
  config.source = source;
  Parser{config}.parse(text, source, base_dir, 0);
  return config;
}

ScenarioConfig load_scenario(std::filesystem::path const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw ConfigError{"cannot open scenario file", path.string()};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string(), path.parent_path());
}

core::JurisdictionTree build_tree(ScenarioConfig const &config)
{
  NodeDecl const *root = nullptr;
  std::set<core::JurisdictionId> declared;
  for (auto const &n : config.nodes)
  {
    if (!declared.insert(n.id).second)
    {
      throw ConfigError{"duplicate node " + n.id.str(), n.source, n.line};
    }
    if (n.id.depth() == 0)
    {
      if (root)
      {
        throw ConfigError{"second root node " + n.id.str() + " (first: " + root->id.str() + ")",
                          n.source, n.line};
      }
      root = &n;
    }
  }
  if (!root)
  {
    throw ConfigError{"no root node declared", config.source};
  }

  // Parents may be declared after their children; insert shallow levels first.
  std::vector<NodeDecl const *> ordered;
  for (auto const &n : config.nodes)
  {
    ordered.push_back(&n);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto const *a, auto const *b) { return a->id.depth() < b->id.depth(); });

  core::JurisdictionTree tree{root->id};
  for (auto const *n : ordered)
  {
    try
    {
      if (n != root)
      {
        if (!declared.contains(n->id.parent()))
        {
          throw ConfigError{"orphan node " + n->id.str() + ": parent " + n->id.parent().str() +
                                " is not declared",
                            n->source, n->line};
        }
        tree.add(n->id);
      }
      if (n->eligible)
      {
        tree.set_eligible(n->id, *n->eligible);
      }
      if (n->weight)
      {
        tree.set_weight(n->id, *n->weight);
      }
      if (n->display_name)
      {
        tree.set_display_name(n->id, *n->display_name);
      }
    }
    catch (HierarchyError const &e)
    {
      throw ConfigError{e.what(), n->source, n->line};
    }
  }
  try
  {
    tree.validate();
  }
  catch (HierarchyError const &e)
  {
    throw ConfigError{e.what(), config.source};
  }
  return tree;
}

}  // namespace prelim::simnet

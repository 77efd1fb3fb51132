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
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace prelim;

namespace {

struct Result
{
  int         code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  Result             r;
  r.code = cli::run(args, out, err);
  r.out  = out.str();
  r.err  = err.str();
  return r;
}

// Runs the real executable and returns its exit status.
int exec(std::string const &args)
{
  auto const command = std::string{PRELIMSIM_BIN} + ' ' + args + " >/dev/null 2>&1";
  auto const status  = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(char const *name)
{
  return (fixture::data_dir() / name).string();
}

std::string scenario(char const *name)
{
  auto const in_tests = fixture::scenario_dir() / (std::string{name} + ".scenario");
  return std::filesystem::exists(in_tests) ? in_tests.string()
                                           : data((std::string{name} + ".scenario").c_str());
}

class TempDir
{
public:
  TempDir()
  {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("prelim-cli-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir()
  {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string operator/(std::string const &name) const
  {
    return (path_ / name).string();
  }

private:
  std::filesystem::path path_;
};

bool contains(std::string const &text, std::string const &needle)
{
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliSimulate, NoAttackSwissPreset)
{
  TempDir    dir;
  auto const r = run({"simulate", "--scenario", scenario("swiss_preset"), "--trace-out",
                      dir / "trace.txt", "--summary-out", dir / "summary.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "divergences: 0\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "final matches ground truth: yes\n"));
  auto const summary = fixture::read_file(dir / "summary.txt");
  EXPECT_EQ(summary.rfind("# prelimsim detection summary v1\n", 0), 0u);
  EXPECT_FALSE(contains(summary, "\ndivergence "));
  EXPECT_EQ(fixture::read_file(dir / "trace.txt").rfind("# prelimsim trace v1\n", 0), 0u);
}

TEST(CliSimulate, RtvgFlipShowsTheDivergenceWindow)
{
  TempDir    dir;
  auto const r = run({"simulate", "--scenario", scenario("rtvg_flip"), "--summary-out",
                      dir / "summary.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "last preliminary: t=")) << r.out;
  EXPECT_TRUE(contains(r.out, "(yes=1126697, no=1126698, blank=")) << r.out;
  EXPECT_TRUE(contains(r.out, "-> Rejected\n"));
  EXPECT_TRUE(contains(r.out, "final: t="));
  EXPECT_TRUE(contains(r.out, "outcome reversals: 1\n"));
  EXPECT_FALSE(contains(r.out, "divergences: 0\n"));
  auto const summary = fixture::read_file(dir / "summary.txt");
  EXPECT_TRUE(contains(summary, "\ndivergence t="));
  EXPECT_TRUE(contains(summary, "integrity_gap ticks="));
}

TEST(CliSimulate, SeedOverride)
{
  TempDir dir;
  ASSERT_EQ(run({"simulate", "--scenario", scenario("polarized"), "--seed", "99", "--trace-out",
                 dir / "a.txt"})
                .code,
            0);
  EXPECT_TRUE(contains(fixture::read_file(dir / "a.txt"), " seed=99 "));
}

TEST(CliSimulate, UserErrorsExitTwo)
{
  TempDir dir;
  auto const missing = run({"simulate", "--scenario", dir / "none.scenario"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.err, "not found"));

  std::ofstream{dir / "bad.scenario"} << "node F\nnode F/A/B channel=x\n";
  auto const bad = run({"simulate", "--scenario", dir / "bad.scenario"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "bad.scenario:2")) << bad.err;

  std::ofstream{dir / "gated.scenario"} << "include " << scenario("polarized") << "\n"
                                        << "secure mode=relay\n"
                                        << "attack tamper from=F/North mutation=swap\n";
  auto const gated = run({"simulate", "--scenario", dir / "gated.scenario"});
  EXPECT_EQ(gated.code, 2);
  EXPECT_TRUE(contains(gated.err, "capability")) << gated.err;
}

TEST(CliSimulate, UnwritableOutputExitsOne)
{
  TempDir dir;
  std::ofstream{dir / "file"} << "x";
  auto const r = run({"simulate", "--scenario", scenario("minimal"), "--trace-out",
                      dir / "file/trace.txt"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliFlip, Rtvg)
{
  auto const r = run({"flip", "--results", data("referendums.csv"), "--referendum", "rtvg-2015"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "total_flips: 1825\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "popular: Accepted\n"));
  EXPECT_TRUE(contains(r.out, "target: Rejected\n"));
}

TEST(CliFlip, FamilySupportDouble)
{
  auto const r = run({"flip", "--results", data("referendums.csv"), "--referendum", "family-2013",
                      "--rule", "double"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "cantonal: Rejected (10 of 23 cantonal votes yes)\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "overall: Rejected\n"));
  EXPECT_TRUE(contains(r.out, "flips GR (Graubünden): 896\n"));
  EXPECT_TRUE(contains(r.out, "flips ZG (Zug): 934\n"));
  EXPECT_TRUE(contains(r.out, "total_flips: 1830\n"));
}

TEST(CliFlip, AlreadyAtTarget)
{
  auto const r = run({"flip", "--results", data("referendums.csv"), "--referendum", "rtvg-2015",
                      "--target", "accepted"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "total_flips: 0\n")) << r.out;
}

TEST(CliFlip, Errors)
{
  TempDir dir;
  EXPECT_EQ(run({"flip", "--results", data("referendums.csv"), "--referendum", "nope"}).code, 2);
  EXPECT_EQ(run({"flip", "--results", data("referendums.csv"), "--referendum", "rtvg-2015",
                 "--rule", "triple"})
                .code,
            2);
  std::ofstream{dir / "partial.csv"}
      << "referendum_id,date,canton,prelim_yes,prelim_no,final_yes,final_no,final_total\n"
      << "r,2015-06-14,VD,1,2,1,2,3\n";
  auto const missing = run({"flip", "--results", dir / "partial.csv", "--referendum", "r"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.err, "data error")) << missing.err;
}

TEST(CliAnalyze, BundledMaxima)
{
  TempDir    dir;
  auto const r = run({"analyze", "--results", data("fig_c_maxima.csv"), "--out", dir / "c.csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "2.24%"));
  EXPECT_TRUE(contains(r.out, "2.72%"));
  auto const csv = fixture::read_file(dir / "c.csv");
  EXPECT_TRUE(contains(csv, "\nVD,3974,177616,2.24\n"));
  EXPECT_TRUE(contains(csv, "\nJU,548,20178,2.72\n"));
}

TEST(CliAnalyze, EmptyAndMalformed)
{
  TempDir dir;
  std::ofstream{dir / "empty.csv"}
      << "referendum_id,date,canton,prelim_yes,prelim_no,final_yes,final_no,final_total\n";
  auto const empty = run({"analyze", "--results", dir / "empty.csv", "--out", dir / "out.csv"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(fixture::read_file(dir / "out.csv"), "canton,votes,total,percent\n");

  std::ofstream{dir / "bad.csv"}
      << "referendum_id,date,canton,prelim_yes,prelim_no,final_yes,final_no,final_total\n"
      << "r,2015-06-14,VD,1,2,1,2,3\n"
      << "r,2015-06-14,GE,x,2,1,2,3\n";
  auto const bad = run({"analyze", "--results", dir / "bad.csv"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "row 3")) << bad.err;
}

TEST(CliKeys, SwissPresetTrustStore)
{
  TempDir    dir;
  auto const r = run({"keys", "--tree", scenario("swiss_preset"), "--out-dir", dir / "a", "--seed",
                      "5", "--scheme", "schnorr-test"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "certificates: 79 (1 root, 78 verified chains)\n")) << r.out;
  std::size_t files = 0;
  for (auto const &entry : std::filesystem::directory_iterator{dir / "a"})
  {
    files += entry.path().extension() == ".cert" ? 1 : 0;
  }
  EXPECT_EQ(files, 79u);

  ASSERT_EQ(run({"keys", "--tree", scenario("swiss_preset"), "--out-dir", dir / "b", "--seed", "5",
                 "--scheme", "schnorr-test"})
                .code,
            0);
  for (auto const &entry : std::filesystem::directory_iterator{dir / "a"})
  {
    auto const name = entry.path().filename().string();
    EXPECT_EQ(fixture::read_file(entry.path()), fixture::read_file(dir / ("b/" + name))) << name;
  }
}

TEST(CliKeys, DefaultSchemeIsEd25519)
{
  TempDir    dir;
  auto const r = run({"keys", "--tree", scenario("minimal"), "--out-dir", dir / "s"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "certificates: 3 (1 root, 2 verified chains)\n")) << r.out;
  EXPECT_TRUE(contains(fixture::read_file(dir / "s/root.cert"), "\nscheme=ed25519\n"));
}

TEST(CliKeys, Errors)
{
  TempDir dir;
  std::ofstream{dir / "file"} << "x";
  EXPECT_EQ(run({"keys", "--tree", scenario("minimal"), "--out-dir", dir / "file/store"}).code, 1);
  std::ofstream{dir / "bad.scenario"} << "node F\nnode G\n";
  EXPECT_EQ(run({"keys", "--tree", dir / "bad.scenario", "--out-dir", dir / "s"}).code, 2);
  EXPECT_EQ(run({"keys", "--tree", dir / "none.scenario", "--out-dir", dir / "s"}).code, 2);
}

TEST(CliUsage, UnknownFlagsAndSubcommands)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto const r = run({"simulate", "--scenario", scenario("minimal"), "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"simulate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliBinary, ExitStatuses)
{
  EXPECT_EQ(exec("simulate --scenario " + scenario("minimal")), 0);
  EXPECT_EQ(exec("simulate --scenario /nonexistent/x.scenario"), 2);
  EXPECT_EQ(exec("analyze --results " + data("fig_c_maxima.csv") + " --unknown-flag"), 2);
  EXPECT_EQ(exec("flip --results " + data("referendums.csv") + " --referendum rtvg-2015"), 0);
  EXPECT_EQ(exec(""), 2);
}

TEST(CliBinary, DeterministicTraceFiles)
{
  TempDir dir;
  for (auto const *name : {"polarized", "city_delay", "rtvg_flip"})
  {
    auto const a = dir / (std::string{name} + ".1");
    auto const b = dir / (std::string{name} + ".2");
    ASSERT_EQ(exec("simulate --scenario " + scenario(name) + " --trace-out " + a), 0);
    ASSERT_EQ(exec("simulate --scenario " + scenario(name) + " --trace-out " + b), 0);
    EXPECT_EQ(fixture::read_file(a), fixture::read_file(b)) << name;
    EXPECT_FALSE(fixture::read_file(a).empty());
  }
}

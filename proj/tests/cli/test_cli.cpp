#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hhl/cli.hpp"

using nlohmann::json;
using namespace hhl::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HomologyAcyclicReport) {
  const auto r = call({"homology", "--complex", "Cpm", "--n", "4", "--assert-acyclic"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("format_version"), 1);
  EXPECT_EQ(j.at("command"), "homology");
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_TRUE(j.at("verdict").at("vanishes").get<bool>());
  EXPECT_EQ(j.at("result").at("betti").at("3"), 233);
}

TEST(Cli, RankOneDpm) {
  const auto r = call({"homology", "--complex", "Dpm", "--n", "1", "--q", "1"});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("result").at("betti").at("-1"), 0);
  EXPECT_EQ(j.at("result").at("betti").at("0"), 1);
}

TEST(Cli, AssertionFailureExitCode) {
  const auto r = call({"identities", "--n", "4", "--q", "2", "--perturb-xi"});
  EXPECT_EQ(r.code, kAssertionFailed);
  const auto j = json::parse(r.out);
  EXPECT_FALSE(j.at("verdict").at("all_passed").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"homology", "--complex", "Dpm", "--n", "3", "--q", "0.5"}).code, kUsageError);
  EXPECT_EQ(call({"homology", "--complex", "X", "--n", "3"}).code, kUsageError);
  EXPECT_EQ(call({"homology", "--n", "3"}).code, kUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(call({"stability", "--n", "2"}).code, kUsageError);
  EXPECT_EQ(call({"homology", "--complex", "Dpm", "--n", "3", "--q", "7", "--field", "Fp:7"}).code, kUsageError);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, GuardExceeded) {
  const auto r = call({"stability", "--n", "6", "--d", "3"});
  ASSERT_EQ(r.code, kGuardExceeded);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict").at("error").at("kind"), "guard");
  EXPECT_GT(j.at("verdict").at("error").at("estimate").get<std::uint64_t>(), 5000000u);
}

TEST(Cli, GuardPrecedence) {
  ::setenv("HHL_GUARD", "10", 1);
  EXPECT_EQ(call({"stability", "--n", "2", "--d", "1"}).code, kGuardExceeded);
  EXPECT_EQ(call({"stability", "--n", "2", "--d", "1", "--guard", "1000"}).code, kOk);
  ::unsetenv("HHL_GUARD");
  const auto j = json::parse(call({"stability", "--n", "1", "--d", "1"}).out);
  EXPECT_EQ(j.at("config").at("guard"), 5000000);
}

TEST(Cli, StabilityCsvMarksUnassertedRows) {
  const auto r = call({"stability", "--n", "2", "--d", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,d,tor_source,tor_target,status,rank,isomorphism");
  EXPECT_NE(r.out.find("1,0,1,1,asserted,1,true"), std::string::npos);
  EXPECT_NE(r.out.find(",unasserted,,"), std::string::npos);
}

TEST(Cli, HomologyCsv) {
  const auto r = call({"homology", "--complex", "C", "--n", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "degree,dim,rank,betti\n-1,1,0,0\n0,3,1,0\n1,6,2,0\n2,6,4,2\n");
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"homology", "--complex", "Dpm", "--n", "3", "--q", "1/3", "--jobs", "3"};
  EXPECT_EQ(call(args).out, call(args).out);
  const std::vector<std::string> ids{"identities", "--n", "3", "--q", "2"};
  EXPECT_EQ(call(ids).out, call(ids).out);
}

TEST(Cli, WritesReportAndExport) {
  const auto dir = std::filesystem::temp_directory_path() / "hhl_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "report.json";
  const auto exp = dir / "complex.json";
  const auto r = call({"homology", "--complex", "D", "--n", "3", "--q", "2", "--out", out.string(), "--export",
                       exp.string(), "--timing"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(out);
  const auto j = json::parse(f);
  EXPECT_TRUE(j.at("result").at("elapsed_ms").is_number());
  std::ifstream g(exp);
  const auto c = json::parse(g);
  EXPECT_EQ(c.at("complex"), "D");
  std::filesystem::remove_all(dir);
}

#include <grpoisson/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace grpoisson;

namespace {

RunResult go(const std::string& cmd, int k, int n, std::optional<std::string> point = std::nullopt, int samples = 20) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.k = k;
  cfg.n = n;
  cfg.samples = samples;
  cfg.point = std::move(point);
  return run(cfg);
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

} // namespace

TEST(Cli, ProvenanceHeader) {
  auto r = go("verify-vzero", 2, 4).report;
  EXPECT_EQ(r["command"], "verify-vzero");
  EXPECT_EQ(r["k"], 2);
  EXPECT_EQ(r["n"], 4);
  EXPECT_EQ(r["seed"], kDefaultSeed);
  EXPECT_EQ(r["toolVersion"], kToolVersion);
}

TEST(Cli, VerifyCommandsPass) {
  for (const auto& cmd : {"verify-theorem", "verify-vzero", "verify-w0", "verify-levi", "verify-jacobi",
                          "verify-torus", "verify-group-ids", "push-check"}) {
    auto res = go(cmd, 2, 4);
    EXPECT_EQ(res.exit_code, 0) << cmd << "\n" << res.report.dump(2);
    EXPECT_EQ(res.report["pass"], true);
  }
  EXPECT_EQ(go("verify-theorem", 1, 2).exit_code, 0);
}

TEST(Cli, VzeroReport) {
  auto res = go("verify-vzero", 2, 4);
  EXPECT_EQ(res.report["V"]["nonzeroCoefficients"], 0);
  EXPECT_TRUE(res.report["V"]["firstOffending"].is_null());
}

TEST(Cli, PushCheckStatistics) {
  auto r = go("push-check", 2, 5, std::nullopt, 30).report;
  for (const char* key : {"c", "w0", "diagonal"}) {
    EXPECT_EQ(r[key]["accepted"], 30);
    EXPECT_GE(r[key]["rawDraws"].get<int>(), 30);
    EXPECT_EQ(r[key]["failures"], 0);
  }
}

TEST(Cli, RankAtPoints) {
  auto res = go("rank", 1, 3, "(1;1)");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report["rank"], 2);
  EXPECT_EQ(go("rank", 1, 3, "(0;0)").report["rank"], 0);
  // Full n x k representatives; the first two lie outside the big cell.
  EXPECT_EQ(go("rank", 1, 3, "(0;1;0)").report["rank"], 0);
  EXPECT_EQ(go("rank", 1, 3, "(0;1;1)").report["rank"], 0);
  EXPECT_EQ(go("rank", 1, 3, "(2;1;1)").report["rank"], 2);
}

TEST(Cli, RankFromFile) {
  auto path = temp_file("grpoisson_point.json", R"({"k": 2, "n": 4, "rows": [["1", "1/2"], [0, "-3"]]})");
  auto res = go("rank", 2, 4, path);
  EXPECT_EQ(res.exit_code, 0) << res.report.dump(2);
  EXPECT_EQ(res.report["point"]["rows"][0][1], "1/2");
  EXPECT_EQ(res.report["rank"].get<int>() % 2, 0);
  std::filesystem::remove(path);
}

TEST(Cli, StrataEnumerate) {
  auto r = go("strata-enumerate", 1, 3).report;
  EXPECT_EQ(r["labelCount"], 7);
  EXPECT_EQ(r["labels"].size(), 7u);
}

TEST(Cli, Classify) {
  auto res = go("classify", 2, 4, std::nullopt, 200);
  EXPECT_EQ(res.exit_code, 0);
  int total = 0;
  for (const auto& st : res.report["strata"]) total += st["count"].get<int>();
  EXPECT_EQ(total, 200);
  EXPECT_LE(res.report["strata"].size(), 33u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(go("verify-theorem", 3, 3).exit_code, 2);
  EXPECT_EQ(go("verify-theorem", 0, 3).exit_code, 2);
  EXPECT_EQ(go("verify-theorem", 1, 3, std::nullopt, 0).exit_code, 2);
  EXPECT_EQ(go("no-such-command", 1, 3).exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3).exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3, "(1,2;3)").exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3, "(1;x)").exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3, "(1/0;1)").exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3, "(0;0;0)").exit_code, 2);
  EXPECT_EQ(go("rank", 1, 3, "/nonexistent/point.json").exit_code, 2);
  auto bad = temp_file("grpoisson_bad.json", "{ not json");
  EXPECT_EQ(go("rank", 1, 3, bad).exit_code, 2);
  std::filesystem::remove(bad);
  auto wrong_k = temp_file("grpoisson_wrong_k.json", R"({"k": 2, "n": 3, "rows": [[1], [1]]})");
  EXPECT_EQ(go("rank", 1, 3, wrong_k).exit_code, 2);
  std::filesystem::remove(wrong_k);
  EXPECT_EQ(go("strata-enumerate", 2, 9).exit_code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& cmd : {"push-check", "classify"}) {
    std::ostringstream a, b;
    render(go(cmd, 2, 4), Format::json, a);
    render(go(cmd, 2, 4), Format::json, b);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(Cli, TextFormat) {
  std::ostringstream os;
  render(go("rank", 1, 3, "(1;1)"), Format::text, os);
  EXPECT_NE(os.str().find("rank: 2\n"), std::string::npos);
  EXPECT_NE(os.str().find("command: rank\n"), std::string::npos);
}

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "comppat/cli.hpp"

using namespace comppat;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_row(const json& rows, unsigned n, unsigned m, unsigned r, const std::string& count) {
  for (const auto& row : rows)
    if (row["n"] == n && row["m"] == m && row["r"] == r) return row["count"] == count;
  return false;
}

}  // namespace

TEST(Cli, ExpandPeak) {
  const Result res = run({"expand", "--pattern", "peak", "--set", "nat", "--order", "6"});
  ASSERT_EQ(res.code, 0) << res.err;
  const json j = json::parse(res.out);
  EXPECT_EQ(j["pattern"], "peak");
  EXPECT_EQ(j["set"], "1,2,3,4,5,6");
  EXPECT_EQ(j["order"], 6);
  EXPECT_TRUE(has_row(j["coefficients"], 4, 3, 1, "1"));
}

TEST(Cli, ExpandOrderZero) {
  const Result res = run({"expand", "--pattern", "111", "--set", "1,2", "--order", "0"});
  ASSERT_EQ(res.code, 0);
  const json rows = json::parse(res.out)["coefficients"];
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(has_row(rows, 0, 0, 0, "1"));
}

TEST(Cli, Expand123FirstOccurrence) {
  const json rows = json::parse(run({"expand", "--pattern", "123", "--order", "6"}).out)["coefficients"];
  EXPECT_TRUE(has_row(rows, 6, 3, 1, "1"));
  for (const auto& row : rows)
    if (row["r"] != 0) EXPECT_EQ(row["n"], 6);
}

TEST(Cli, ExpandRowsAreSorted) {
  const json rows = json::parse(run({"expand", "--pattern", "valley", "--order", "9"}).out)["coefficients"];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [&](std::size_t k) {
      return std::tuple<unsigned, unsigned, unsigned>(rows[k]["n"], rows[k]["m"], rows[k]["r"]);
    };
    EXPECT_LT(key(i - 1), key(i));
  }
}

TEST(Cli, ExpandCsv) {
  const Result res = run({"expand", "--pattern", "111", "--set", "1", "--order", "3", "--format", "csv"});
  ASSERT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "n,m,r,count\n0,0,0,1\n1,1,0,1\n2,2,0,1\n3,3,1,1\n");
}

TEST(Cli, AvoidersGolden) {
  const json j = json::parse(run({"avoiders", "--pattern", "221", "--set", "nat", "--order", "20"}).out);
  ASSERT_EQ(j["values"].size(), 21u);
  EXPECT_EQ(j["values"].back(), "337118");
  const Result b = run({"avoiders", "--pattern", "valley", "--order", "20", "--bfile"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(b.out.substr(0, 8), "0 1\n1 1\n");
  EXPECT_NE(b.out.find("\n20 145528\n"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  Result res = run({"avoiders", "--pattern", "112", "--set", "1,1", "--order", "5"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--set"), std::string::npos);
  res = run({"expand", "--pattern", "132", "--order", "5"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--pattern"), std::string::npos);
  res = run({"expand", "--pattern", "111", "--order", "61"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--order"), std::string::npos);
  res = run({"expand", "--pattern", "111", "--order", "5", "--format", "xml"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--format"), std::string::npos);
  res = run({"asymptotics", "--pattern", "111", "--samples", "100"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--samples"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Asymptotics) {
  const Result res = run({"asymptotics", "--pattern", "112"});
  ASSERT_EQ(res.code, 0) << res.err;
  const json j = json::parse(res.out);
  EXPECT_NEAR(j["v"].get<double>(), 1.80688, 1e-5);
  EXPECT_NEAR(j["K"].get<double>(), 0.692005, 1e-5);
  EXPECT_EQ(j["winding"], 1);
  EXPECT_FALSE(j.contains("warning"));
  EXPECT_EQ(j["tolerances"]["samples"], 4096);
}

TEST(Cli, AsymptoticsSmallRadiusWarns) {
  const Result res = run({"asymptotics", "--pattern", "111", "--radius", "0.51"});
  ASSERT_EQ(res.code, 0);
  const json j = json::parse(res.out);
  EXPECT_EQ(j["winding"], 0);
  EXPECT_TRUE(j.contains("warning"));
}

TEST(Cli, CurveCsv) {
  const auto path = std::filesystem::temp_directory_path() / "comppat_curve_test.csv";
  const Result res =
      run({"asymptotics", "--pattern", "peak", "--samples", "1024", "--curve-csv", path.string()});
  ASSERT_EQ(res.code, 0) << res.err;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "re_x,im_x,re_f,im_f");
  unsigned rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 1024u);
  std::filesystem::remove(path);
}

TEST(Cli, Verify) {
  Result res = run({"verify", "--pattern", "peak", "--set", "1,2", "--max-n", "12"});
  EXPECT_EQ(res.code, 0) << res.out;
  json j = json::parse(res.out);
  EXPECT_GT(j["checked"].get<int>(), 0);
  EXPECT_TRUE(j["mismatches"].empty());
  res = run({"verify", "--pattern", "123", "--set", "2,3,5", "--max-n", "14"});
  EXPECT_EQ(res.code, 0);
  res = run({"verify", "--words", "--pattern", "112", "-k", "3", "--max-m", "7"});
  EXPECT_EQ(res.code, 0) << res.out;
  EXPECT_EQ(json::parse(res.out)["k"], 3);
}

TEST(Cli, Words) {
  Result res = run({"words", "--pattern", "peak", "-k", "1", "--order", "6"});
  ASSERT_EQ(res.code, 0);
  json rows = json::parse(res.out)["coefficients"];
  EXPECT_EQ(rows.size(), 7u);
  for (const auto& row : rows) {
    EXPECT_EQ(row["r"], 0);
    EXPECT_EQ(row["count"], "1");
  }
  res = run({"words", "--pattern", "111", "-k", "2", "--order", "4", "--format", "csv"});
  EXPECT_NE(res.out.find("\n3,1,2\n"), std::string::npos);
  const Result peak = run({"words", "--pattern", "peak", "-k", "4", "--order", "8", "--format", "csv"});
  const Result valley = run({"words", "--pattern", "valley", "-k", "4", "--order", "8", "--format", "csv"});
  EXPECT_EQ(peak.out, valley.out);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"expand", "--pattern", "221", "--set", "1,3,4", "--order", "15"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> asym = {"asymptotics", "--pattern", "valley", "--samples", "1024"};
  EXPECT_EQ(run(asym).out, run(asym).out);
}

TEST(Cli, Version) {
  const Result res = run({"--version"});
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find(kToolVersion), std::string::npos);
}

TEST(Cli, VerifyRefusesHugeEnumerations) {
  Result res = run({"verify", "--pattern", "111", "--max-n", "40"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--max-n"), std::string::npos);
  res = run({"verify", "--words", "--pattern", "111", "-k", "9", "--max-m", "20"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--max-m"), std::string::npos);
}

#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using topogame::cli::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "topogame");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = topogame::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const std::string kDisconnected = std::string(TOPOGAME_TEST_DATA) + "/disconnected.txt";

}  // namespace

TEST(CliOutcome, CycleIsAllHalves) {
  const auto r = run({"outcome", "--graph", "cycle:6", "--k", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["strategies"].size(), 6u);
  for (const auto& row : j["matrix"])
    for (const auto& cell : row) EXPECT_EQ(cell, "1/2");
}

TEST(CliOutcome, PathContainsFourNinths) {
  const auto r = run({"outcome", "--graph", "path:3"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["matrix"][1][0], "4/9");
}

TEST(CliOutcome, CsvDecimals) {
  const auto r = run({"outcome", "--graph", "path:3", "--format", "csv", "--precision", "3"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0.500,0.556,0.500\n0.444,0.500,0.444\n0.500,0.556,0.500\n");
}

TEST(CliOutcome, DisconnectedInputExitsTwo) {
  const auto r = run({"outcome", "--graph", kDisconnected});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("graph not connected"), std::string::npos);
}

TEST(CliOutcome, BadInputsExitTwo) {
  EXPECT_EQ(run({"outcome", "--graph", "path:3", "--k", "4"}).status, 2);
  EXPECT_EQ(run({"outcome", "--graph", "circulant:6:4"}).status, 2);
  EXPECT_EQ(run({"outcome", "--graph", "/no/such/file"}).status, 2);
  EXPECT_EQ(run({"outcome"}).status, 2);
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({"outcome", "--graph", "path:10", "--k", "5", "--cap", "100"}).status, 2);
}

TEST(CliNash, Star) {
  const auto r = run({"nash", "--graph", "star:4"});
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["nash_pairs"], Json::parse("[[[1],[1]]]"));
  EXPECT_EQ(j["shortcut_used"], false);
  EXPECT_EQ(j["shortcut"], "center:1");
}

TEST(CliNash, CycleUsesShortcut) {
  const auto j = Json::parse(run({"nash", "--graph", "cycle:6"}).out);
  EXPECT_EQ(j["nash_pairs"].size(), 36u);
  EXPECT_EQ(j["shortcut_used"], true);
  EXPECT_EQ(j["nash_value"], "1/2");
}

TEST(CliNash, PathValue) {
  const auto j = Json::parse(run({"nash", "--graph", "path:3"}).out);
  EXPECT_EQ(j["nash_value"], "1/2");
  EXPECT_EQ(j["upper_value"], "1/2");
  EXPECT_EQ(j["security_set"], Json::parse("[[2]]"));
  EXPECT_EQ(j["canonical_pair"], Json::parse("[[2],[2]]"));
}

TEST(CliNash, PairsGame) {
  const auto r = run({"nash", "--graph", "path:4", "--k", "2"});
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["shortcut_used"], false);
  EXPECT_EQ(j["shortcut"], nullptr);
}

TEST(CliSecurityAndSeSet, Path) {
  const auto s = Json::parse(run({"security", "--graph", "path:3"}).out);
  EXPECT_EQ(s["row_security"], s["column_security"]);
  EXPECT_EQ(Json::parse(run({"se-set", "--graph", "path:3"}).out)["se_set"], Json::parse("[2]"));
}

TEST(CliTau, Counts) {
  EXPECT_EQ(Json::parse(run({"tau", "--graph", "complete:4"}).out)["spanning_trees"], "16");
  EXPECT_EQ(Json::parse(run({"tau", "--graph", "cycle:6"}).out)["spanning_trees"], "6");
}

TEST(CliGen, EdgeListAndJson) {
  EXPECT_EQ(run({"gen", "--graph", "star:4"}).out, "4 3\n1 2\n1 3\n1 4\n");
  EXPECT_EQ(Json::parse(run({"gen", "--graph", "path:3", "--format", "json"}).out)["edges"], Json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(run({"gen", "--graph", kDisconnected}).out, "4 2\n1 2\n3 4\n");
}

TEST(CliSimulate, SharedFollowerConsensus) {
  const auto r = run({"simulate", "--graph", "path:3", "--b", "2", "--d", "2", "--y0", "-1", "--y1", "1", "--x0", "0.7,-0.3,0.2"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, line, last;
  std::getline(in, header);
  EXPECT_EQ(header, "t,x1,x2,x3,d0,d1");
  while (std::getline(in, line)) last = line;
  const auto cells = topogame::cli::split(last, ',');
  ASSERT_EQ(cells.size(), 6u);
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(std::stod(cells[i]), 0.0, 1e-6);
  EXPECT_NE(r.err.find("converged"), std::string::npos);
}

TEST(CliSimulate, K2Distances) {
  const auto r = run({"simulate", "--graph", "complete:2", "--b", "1", "--d", "2", "--y0", "0", "--y1", "1"});
  ASSERT_EQ(r.status, 0);
  const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  const auto cells = topogame::cli::split(last, ',');
  EXPECT_NEAR(std::stod(cells[3]), 0.5, 1e-6);
  EXPECT_NEAR(std::stod(cells[4]), 0.5, 1e-6);
}

TEST(CliSimulate, UnstableStepExitsTwo) {
  EXPECT_EQ(run({"simulate", "--graph", "path:3", "--b", "1", "--d", "3", "--dt", "0.5"}).status, 2);
  EXPECT_EQ(run({"simulate", "--graph", "path:3", "--b", "1", "--d", "3", "--y0", "1", "--y1", "0"}).status, 2);
  EXPECT_EQ(run({"simulate", "--graph", "path:3", "--b", "9", "--d", "3"}).status, 2);
}

TEST(CliVerify, CycleAllPass) {
  const auto r = run({"verify", "--graph", "cycle:6", "--seed", "3"});
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  bool saw_all_pairs = false;
  for (const auto& c : j["checks"]) saw_all_pairs |= c["name"] == "all-pairs-Nash";
  EXPECT_TRUE(saw_all_pairs);
}

TEST(CliVerify, RandomGraphAndPairsGame) {
  const auto r = run({"verify", "--graph", std::string(TOPOGAME_TEST_DATA) + "/random6.txt", "--k", "2", "--seed", "9"});
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = Json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  for (const char* want : {"half-comparison-consistency", "neighborhood-dominance-soundness", "adjugate-sum-identity", "outcome-involution (k=2)"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

TEST(CliVerify, DisconnectedGate) {
  const auto r = run({"verify", "--graph", kDisconnected});
  EXPECT_EQ(r.status, 2);
  EXPECT_FALSE(Json::parse(r.out)["all_pass"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args : {std::vector<std::string>{"verify", "--graph", "star:5", "--seed", "4"},
                                               std::vector<std::string>{"outcome", "--graph", "circulant:7:1,3", "--k", "2"},
                                               std::vector<std::string>{"simulate", "--graph", "cycle:5", "--b", "1", "--d", "3"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

TEST(CliReconstruct, FindsCenterGraph) {
  const auto r = run({"reconstruct-example2"});
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["matches"].size(), 1u);
  EXPECT_EQ(j["matches"][0]["edges"], Json::parse("[[1,2],[1,3],[1,4],[1,5],[1,6],[3,4],[4,5],[5,6]]"));
  EXPECT_EQ(j["matches"][0]["matrix"][0][1], "0.3889");
}

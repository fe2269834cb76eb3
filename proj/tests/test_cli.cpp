#include <gtest/gtest.h>
#include <algorithm>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(TRICOVER_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TRICOVER_DATA_DIR) + "/" + name; }

nlohmann::json run_json(const std::string& args, int expected_status = 0) {
  const Outcome r = run(args + " --format json");
  EXPECT_EQ(r.status, expected_status) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Analyze, SingleEdge) {
  const auto doc = run_json("analyze " + data("single_edge.h3"));
  ASSERT_EQ(doc["components"].size(), 1u);
  EXPECT_EQ(doc["components"][0]["tau"], 1);
  EXPECT_EQ(doc["components"][0]["tight"], true);
}

TEST(Analyze, TwoCycle) {
  const auto doc = run_json("analyze " + data("two_cycle.h3"));
  EXPECT_EQ(doc["components"][0]["tau"], 1);
  EXPECT_EQ(doc["components"][0]["tight"], false);
  EXPECT_EQ(doc["components"][0]["cycle"]["minimal"], true);
}

TEST(Analyze, DisconnectedHasComponentSections) {
  const auto doc = run_json("analyze " + data("disconnected.h3"));
  EXPECT_EQ(doc["connected"], false);
  ASSERT_EQ(doc["components"].size(), 2u);
  EXPECT_EQ(doc["components"][0]["m"], 1);
  EXPECT_EQ(doc["components"][1]["m"], 2);
  EXPECT_NE(run("analyze " + data("disconnected.h3")).out.find("component 2"), std::string::npos);
}

TEST(Analyze, ParseErrorExitsWithUsageCode) {
  EXPECT_EQ(run("analyze " + data("bad_arity.h3")).status, 2);
  EXPECT_EQ(run("analyze " + data("missing.h3")).status, 2);
}

TEST(Cover, ExactOnExtremal) {
  const auto doc = run_json("cover --method exact " + data("extremal4.h3"));
  EXPECT_EQ(doc["size"], 3);
  EXPECT_EQ(doc["tight"], true);
  EXPECT_EQ(doc["certificate"]["cover"].size(), 3u);
}

TEST(Cover, ConstructiveWithinBound) {
  for (const char* file : {"single_edge.h3", "two_cycle.h3", "extremal4.h3", "triangle.h3"}) {
    const auto doc = run_json("cover --method constructive " + data(file));
    EXPECT_LE(doc["size"].get<int>() * 3, doc["bound_num"].get<int>()) << file;
  }
}

TEST(Cover, HypertreeOnCyclicInputFails) {
  EXPECT_EQ(run("cover --method hypertree " + data("triangle.h3")).status, 2);
  EXPECT_EQ(run("cover --method hypertree " + data("extremal4.h3")).status, 0);
}

TEST(Cover, ExactBudget) { EXPECT_EQ(run("cover --method exact --budget 2 " + data("extremal4.h3")).status, 2); }

TEST(Verify, CensusTwo) {
  const auto doc = run_json("verify --census 2");
  EXPECT_EQ(doc["counts"]["instances"], 3);
  EXPECT_EQ(doc["counts"]["failures"], 0);
}

TEST(Verify, RandomIsDeterministic) {
  const Outcome a = run("verify --random 100 --seed 7 --format json");
  const Outcome b = run("verify --random 100 --seed 7 --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["counts"]["instances"], 100);
}

TEST(Verify, DisconnectedFileIsVerifiedPerComponent) {
  const auto doc = run_json("verify " + data("disconnected.h3"));
  EXPECT_EQ(doc["counts"]["instances"], 2);
  ASSERT_EQ(doc["reports"].size(), 2u);
  for (const auto& r : doc["reports"]) EXPECT_EQ(r["is_connected"], true);
}

TEST(Verify, NeedsASource) { EXPECT_EQ(run("verify").status, 2); }

TEST(Generate, HypertreePm) {
  const Outcome r = run("generate hypertree-pm --m 4 --seed 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  EXPECT_EQ(run("generate hypertree-pm --m 3").status, 2);
}

TEST(Generate, LooseTriangle) {
  EXPECT_EQ(run("generate cycle --k 3 --linear").out, "1 2 3\n3 4 5\n5 6 1\n");
}

TEST(Generate, PipesIntoAnalyze) {
  const Outcome r = run("generate hypertree-pm --m 7 --seed 1 | " + std::string(TRICOVER_CLI) + " analyze - --format json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["components"][0]["extremal"], true);
  EXPECT_EQ(doc["components"][0]["tau"], 5);
}

TEST(Enumerate, CensusKeys) {
  const Outcome r = run("enumerate --m 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Usage, UnknownOptionAndMissingCommand) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("cover --method greedy x").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

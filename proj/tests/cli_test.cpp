#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "magiccover/cli.hpp"
#include "magiccover/json_io.hpp"

namespace magiccover {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const auto dir = std::filesystem::path(MAGICCOVER_TEST_TMP) / "cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

TEST(Cli, LabelThenVerifyFlowerSeven) {
  const auto file = tmp("flower7.json");
  ASSERT_EQ(run({"label", "--family", "flower:n=7", "--out", file}).code, 0);
  const auto j = read_json_file(file);
  EXPECT_EQ(j["pattern"], "cycle:n=3");
  EXPECT_EQ(j["expected_magic_sum"], 119);
  EXPECT_EQ(j["labels"].size(), 43u);
  EXPECT_EQ(j["labels"]["x0"], 8);
  EXPECT_FALSE(j["labels"].contains("x7|x1"));
  EXPECT_EQ(j["labels"]["x1|x7"], 20);
  const auto r = run({"verify", "--graph", file, "--labeling", file, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = Json::parse(r.out);
  EXPECT_EQ(report["certified"], true);
  EXPECT_EQ(report["magic_sum"], 119);
  EXPECT_EQ(report["copy_count"], 14);
}

TEST(Cli, EvenFlowerIsRejected) {
  const auto r = run({"--json-errors", "label", "--family", "flower:n=4"});
  EXPECT_EQ(r.code, 2);
  const auto err = Json::parse(r.err);
  EXPECT_EQ(err["error"], "ParamOutOfRange");
}

TEST(Cli, FlowerThreeFailsVerification) {
  const auto file = tmp("flower3.json");
  ASSERT_EQ(run({"label", "--family", "flower:n=3", "--out", file}).code, 0);
  const auto r = run({"verify", "--graph", file, "--labeling", file, "--text"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAILED (SumMismatch)"), std::string::npos);
  EXPECT_NE(r.out.find("sum 39"), std::string::npos);
}

TEST(Cli, PathAttachK4Minus) {
  const auto file = tmp("fig1.json");
  ASSERT_EQ(run({"label", "--family", "pathattach:g=k4minus,v=v4,k=5", "--out", file}).code, 0);
  const auto r = run({"verify", "--graph", file, "--labeling", file, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = Json::parse(r.out);
  EXPECT_EQ(report["magic_sum"], 462);
  EXPECT_EQ(report["copy_count"], 4);
}

TEST(Cli, FirecrackerWithFivePointStars) {
  const auto file = tmp("fc55.json");
  ASSERT_EQ(run({"label", "--family", "firecracker:k=5,n=5", "--out", file}).code, 0);
  const auto r = run({"verify", "--graph", file, "--labeling", file, "--pattern", "family:firecracker:k=2,n=5",
                      "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["magic_sum"], 462);
}

TEST(Cli, FirecrackerWithFourPointStarsHasExtraCopies) {
  // inner path vertices of F_{5,4} are centres of further K_{1,3}s
  const auto file = tmp("fc54.json");
  ASSERT_EQ(run({"label", "--family", "firecracker:k=5,n=4", "--out", file}).code, 0);
  EXPECT_EQ(read_json_file(file)["expected_magic_sum"], 290);
  const auto r = run({"verify", "--graph", file, "--labeling", file, "--json"});
  EXPECT_EQ(r.code, 1);
  const auto report = Json::parse(r.out);
  EXPECT_EQ(report["copy_count"], 8);
  EXPECT_EQ(report["failure"]["kind"], "SumMismatch");
}

TEST(Cli, ConstructBanana) {
  const auto r = run({"construct", "--family", "banana:k=2,n=4"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 9u);
  EXPECT_EQ(j["edges"].size(), 8u);
}

TEST(Cli, LabelOfPlainFamilyHasNoConstruction) {
  const auto r = run({"label", "--family", "wheel:n=5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no supermagic construction"), std::string::npos);
}

TEST(Cli, ExportDotAndJsonRoundTrip) {
  const auto file = tmp("flower5.json");
  ASSERT_EQ(run({"label", "--family", "flower:n=5", "--out", file}).code, 0);
  const auto dot = run({"export", "--graph", file, "--labeling", file, "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
  EXPECT_NE(dot.out.find("x0 [6]"), std::string::npos);
  EXPECT_NE(dot.out.find("label="), std::string::npos);

  const auto exported = tmp("flower5_export.json");
  ASSERT_EQ(run({"export", "--graph", file, "--labeling", file, "--format", "json", "--out", exported}).code, 0);
  const auto a = read_json_file(file);
  const auto b = read_json_file(exported);
  const Graph ga = graph_from_json(a), gb = graph_from_json(b);
  EXPECT_EQ(ga, gb);
  EXPECT_EQ(labels_from_json(ga, a), labels_from_json(gb, b));
}

TEST(Cli, SearchPathFour) {
  const auto g = tmp("p4.json");
  const auto h = tmp("p3.json");
  write(g, graph_to_json(path(4)).dump());
  write(h, graph_to_json(path(3)).dump());
  const auto first = run({"search", "--graph", g, "--pattern", h});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(Json::parse(first.out)["outcome"], "Solution");
  const auto count = run({"search", "--graph", g, "--pattern", "path:k=3", "--count"});
  ASSERT_EQ(count.code, 0);
  EXPECT_EQ(Json::parse(count.out)["outcome"], "Count");
  const auto none = run({"search", "--graph", g, "--pattern", h, "--target", "1000"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(Json::parse(none.out)["outcome"], "NoSolution");
  const auto limited = run({"search", "--graph", g, "--pattern", h, "--count", "--node-limit", "3"});
  EXPECT_EQ(limited.code, 1);
  EXPECT_EQ(Json::parse(limited.out)["outcome"], "Exhausted");
}

TEST(Cli, CorruptedLabelingIsRejected) {
  const auto file = tmp("flower7_bad.json");
  ASSERT_EQ(run({"label", "--family", "flower:n=7", "--out", file}).code, 0);
  auto j = read_json_file(file);
  std::swap(j["labels"]["x1"], j["labels"]["x2"]);
  write(file, j.dump());
  EXPECT_EQ(run({"verify", "--graph", file, "--labeling", file}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"label"}).code, 2);
  EXPECT_EQ(run({"export", "--graph", "x.json", "--format", "png"}).code, 2);
  EXPECT_EQ(run({"search", "--graph", "x", "--pattern", "y", "--count", "--target", "3"}).code, 2);
  const auto missing = run({"--json-errors", "verify", "--graph", tmp("nope.json"), "--labeling", tmp("nope.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(Json::parse(missing.err)["error"], "IoError");
  const auto bad_spec = run({"construct", "--family", "banana:k=x,n=4"});
  EXPECT_EQ(bad_spec.code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyNeedsAPattern) {
  const auto g = tmp("c3.json");
  write(g, R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]})");
  const auto l = tmp("c3_labels.json");
  write(l, R"({"labels":{"a":1,"b":2,"c":3,"a|b":4,"b|c":5,"a|c":6}})");
  EXPECT_EQ(run({"verify", "--graph", g, "--labeling", l}).code, 2);
  const auto r = run({"verify", "--graph", g, "--labeling", l, "--pattern", "cycle:n=3", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["magic_sum"], 21);
}

}  // namespace
}  // namespace magiccover

#include "json.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string output;
};

/// Runs the CLI with the given arguments; stdout and stderr are merged.
Run cli(const std::string& args) {
  const std::string cmd = std::string(FRACGEO_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(FRACGEO_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp(const std::string& name) {
  return ::testing::TempDir() + "/fracgeo_" + name;
}

}  // namespace

TEST(Cli, PerimeterJson) {
  const auto r = cli("perimeter --body " + data("square.json") + " --gauge ball --s 0.5 --route xray --res 256");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_NEAR(j["value"].get<double>(), 76.967, 0.01);
  EXPECT_GT(j["cost"].get<double>(), 0.0);
}

TEST(Cli, InvalidSExitsWithTwo) {
  const auto r = cli("perimeter --s 1.5");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("s must lie in (0,1)"), std::string::npos) << r.output;
}

TEST(Cli, SchemaErrorNamesPath) {
  const auto r = cli("perimeter --body " + data("bad_body.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("$.normals[2][1]"), std::string::npos) << r.output;
}

TEST(Cli, UnknownFlagExitsWithTwo) {
  EXPECT_EQ(cli("perimeter --bogus 3").status, 2);
  EXPECT_EQ(cli("").status, 2);
}

TEST(Cli, MonteCarloOutputIsByteIdentical) {
  const std::string a = temp("mc_a.json"), b = temp("mc_b.json");
  const std::string args = "perimeter --body pentagon --gauge square --s 0.4 --route montecarlo --samples 50000 --seed 9 --out ";
  ASSERT_EQ(cli(args + a).status, 0);
  ASSERT_EQ(cli(args + b + " --threads 3").status, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, AreaMeasureInThreeDimensions) {
  const auto r = cli("area-measure --body " + data("cube.json") + " --gauge ball --s 0.5 --res 64 --per-facet 2");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["atoms"].size(), 6u);
}

TEST(Cli, LimitsCsv) {
  const auto r = cli("limits --body square --gauge ball --s-list 0.3,0.1 --res 128 --per-facet 28");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("s,id,lhs,rhs,ratio\n", 0), 0u);
  EXPECT_EQ(std::count(r.output.begin(), r.output.end(), '\n'), 9);
}

TEST(Cli, SolveTriangleTarget) {
  const auto r = cli("solve --target " + data("triangle_target.json") + " --gauge ball --s 0.5 --res 128 --per-facet 28 --trace");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_LT(j["residual"].get<double>(), 0.02);
  EXPECT_TRUE(j.contains("objective_trace"));
}

TEST(Cli, SolveRejectsSubsphereTarget) {
  const auto r = cli("solve --target " + data("antipodal_target.json") + " --gauge ball --s 0.5");
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, IsoperimetricSmallFan) {
  const auto r = cli("isoperimetric --gauge " + data("ellipse_gauge.json") + " --s 0.5 --fan 8 --res 128 --per-facet 28");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_TRUE(nlohmann::json::parse(r.output).contains("optimizer"));
}

TEST(Cli, PresetIsDeterministic) {
  const std::string a = temp("preset_a.json"), b = temp("preset_b.json");
  ASSERT_EQ(cli("preset subsphere-rejection --out " + a).status, 0);
  ASSERT_EQ(cli("preset 12 --out " + b).status, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(cli("preset no-such-preset").status, 2);
}

#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace wallcube;
using namespace wallcube::testing;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wallcube_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run_cmd(const std::string& cmd, const std::string& input, const std::string& sub = "out",
                  RunConfig cfg = {}) {
    cfg.command = cmd;
    cfg.input = input;
    cfg.out_dir = (dir_ / sub).string();
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<std::string> kFixtures{"theta",        "c8_cross", "c8_single", "c8_empty",
                                         "c12_nested",   "grid",     "wedge4",    "theta_nested",
                                         "c9_thin",      "c8_nested_degenerate",  "p4"};

}  // namespace

TEST_F(Cli, MatchesGoldenReports) {
  for (const auto& name : kFixtures) {
    for (const char* cmd : {"validate", "build", "tree", "oracle"}) {
      auto r = run_cmd(cmd, fixture(name), name + "." + cmd);
      std::string got = r.out + "-- stderr --\n" + r.err + "-- exit " + std::to_string(r.code) + " --\n";
      std::string want = slurp(fs::path(WALLCUBE_FIXTURES) / "expected" / (name + "." + cmd + ".txt"));
      EXPECT_EQ(got, want) << name << " " << cmd;
    }
  }
}

TEST_F(Cli, ValidateTheta) {
  auto r = run_cmd("validate", fixture("theta"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("RESULT: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("fullness index 3"), std::string::npos);
}

TEST_F(Cli, ValidatePathFails) {
  auto r = run_cmd("validate", fixture("p4"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("[FAIL] no cut point"), std::string::npos);
  EXPECT_NE(r.out.find("{1,2}"), std::string::npos);
}

TEST_F(Cli, MalformedJsonIsParseError) {
  auto p = write("bad.json", "{\n  \"vertices\": [\"a\",\n}\n");
  for (const char* cmd : {"validate", "build", "tree", "oracle"}) {
    auto r = run_cmd(cmd, p.string());
    EXPECT_EQ(r.code, 1) << cmd;
    EXPECT_NE(r.err.find("bad.json:3:"), std::string::npos) << r.err;
  }
}

TEST_F(Cli, MissingInputIsParseError) { EXPECT_EQ(run_cmd("build", (dir_ / "none.json").string()).code, 1); }

TEST_F(Cli, UnknownCommand) { EXPECT_EQ(run_cmd("draw", fixture("theta")).code, 1); }

TEST_F(Cli, BuildReports) {
  auto theta_run = run_cmd("build", fixture("theta"));
  EXPECT_EQ(theta_run.code, 0);
  EXPECT_NE(theta_run.out.find("4 vertices, 3 edges, dimension 1, 1 hyperplane orbit = 1 division orbit"),
            std::string::npos);
  auto cross = run_cmd("build", fixture("c8_cross"));
  EXPECT_NE(cross.out.find("4 vertices, 4 edges, 1 square, dimension 2"), std::string::npos);
  auto empty = run_cmd("build", fixture("c8_empty"));
  EXPECT_NE(empty.out.find("1 vertex, dimension 0"), std::string::npos);
}

TEST_F(Cli, BuildWritesArtifacts) {
  ASSERT_EQ(run_cmd("build", fixture("theta"), "art").code, 0);
  for (const char* f : {"report.txt", "complex.json", "complex.dot", "divisions.json", "transversality.json",
                        "crossing.dot"}) {
    EXPECT_TRUE(fs::exists(dir_ / "art" / f)) << f;
  }
  auto j = nlohmann::json::parse(slurp(dir_ / "art" / "complex.json"));
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["stabilizers_match"], true);
  auto d = nlohmann::json::parse(slurp(dir_ / "art" / "divisions.json"));
  EXPECT_EQ(d["divisions"].size(), 3u);
  EXPECT_EQ(d["divisions"][0]["fullness_index"], 3);
}

TEST_F(Cli, CapsGiveExitThree) {
  RunConfig small_group;
  small_group.cap_group = 2;
  EXPECT_EQ(run_cmd("build", fixture("theta"), "g", small_group).code, 3);
  RunConfig small_complex;
  small_complex.cap_vertices = 2;
  EXPECT_EQ(run_cmd("build", fixture("theta"), "v", small_complex).code, 3);
  RunConfig few_walls;
  few_walls.cap_walls = 2;
  auto r = run_cmd("oracle", fixture("theta"), "w", few_walls);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("exceeds the cap"), std::string::npos);
  RunConfig zero;
  zero.cap_walls = 0;
  EXPECT_EQ(run_cmd("oracle", fixture("theta"), "z", zero).code, 1);
}

TEST_F(Cli, ErrorKindsMapToExitCodes) {
  std::ostringstream sink;
  EXPECT_EQ(report_error(InputError("x"), sink), 1);
  EXPECT_EQ(report_error(ValidationError("x"), sink), 2);
  EXPECT_EQ(report_error(CapExceeded("x"), sink), 3);
  EXPECT_EQ(report_error(TheoremViolation("x"), sink), 4);
  EXPECT_EQ(report_error(OracleMismatch("x"), sink), 5);
}

TEST_F(Cli, TreeTheta) {
  auto r = run_cmd("tree", fixture("theta"), "t");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S {a,b}"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphism certificate: verified (group order 6)"), std::string::npos);
  auto cert = nlohmann::json::parse(slurp(dir_ / "t" / "certificate.json"));
  EXPECT_EQ(cert["ok"], true);
  EXPECT_EQ(cert["equivariance_check"], true);
  EXPECT_EQ(cert["vertex_map"].size(), 4u);
  for (const char* f : {"tree_tc.dot", "tree_tc.json", "cutpoint_tree.dot", "tree_report.txt"}) {
    EXPECT_TRUE(fs::exists(dir_ / "t" / f)) << f;
  }
}

TEST_F(Cli, TreeCrossingNamesPair) {
  auto r = run_cmd("tree", fixture("c8_cross"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mutual separation violated by ({0,4},{2,6})"), std::string::npos);
}

TEST_F(Cli, TreeEmptyFamilyTrivialCertificate) {
  auto r = run_cmd("tree", fixture("c8_empty"), "e");
  EXPECT_EQ(r.code, 0);
  auto cert = nlohmann::json::parse(slurp(dir_ / "e" / "certificate.json"));
  EXPECT_EQ(cert["ok"], true);
  EXPECT_EQ(cert["vertex_map"].size(), 1u);
}

TEST_F(Cli, TreeThinClassSkipsTyping) {
  auto r = run_cmd("tree", fixture("c9_thin"), "thin");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped (thin classes)"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "thin" / "certificate.json"));
}

TEST_F(Cli, OracleSingleWall) {
  auto r = run_cmd("oracle", fixture("c8_single"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("complex vertices: 2 = 2"), std::string::npos);
  EXPECT_NE(r.out.find("oracle agreement: 100%"), std::string::npos);
}

TEST_F(Cli, NoOracleSkipsDiff) {
  RunConfig cfg;
  cfg.oracle = false;
  auto r = run_cmd("build", fixture("theta"), "n", cfg);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("oracle: skipped"), std::string::npos);
}

TEST_F(Cli, Deterministic) {
  for (const auto& name : kFixtures) {
    for (const char* cmd : {"validate", "build", "tree", "oracle"}) {
      auto a = run_cmd(cmd, fixture(name), "a");
      auto b = run_cmd(cmd, fixture(name), "b");
      EXPECT_EQ(a.out, b.out) << name << " " << cmd;
      EXPECT_EQ(a.err, b.err) << name << " " << cmd;
      EXPECT_EQ(a.code, b.code);
      if (!fs::exists(dir_ / "a")) continue;
      for (const auto& e : fs::directory_iterator(dir_ / "a")) {
        EXPECT_EQ(slurp(e.path()), slurp(dir_ / "b" / e.path().filename())) << name << " " << e.path().filename();
      }
      fs::remove_all(dir_ / "a");
      fs::remove_all(dir_ / "b");
    }
  }
}

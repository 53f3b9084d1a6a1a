#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clines/cli.hpp"

using clines::Json;
namespace cli = clines::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(CLINES_SAMPLES_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("clines_test_" + name);
  std::ofstream(p) << body;
  return p;
}

void expect_error(const Result& r, int code, const std::string& kind) {
  EXPECT_EQ(r.code, code) << r.out << r.err;
  ASSERT_FALSE(r.err.empty());
  const Json j = Json::parse(r.err);
  EXPECT_EQ(j["error"]["kind"], kind) << r.err;
  EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
}

// every number in the tree is an integer
bool integral(const Json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& v : j)
      if (!integral(v)) return false;
  return true;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv(cli::kBudgetEnv, value, 1); }
  ~EnvGuard() { ::unsetenv(cli::kBudgetEnv); }
};

}  // namespace

TEST(Cli, AnalyzeQuadricJson) {
  const auto r = run({"analyze", "--example", "quadric-surface", "--field", "fp:10007", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["sigma_infinity"]["dim"], 0);
  EXPECT_EQ(j["sigma_infinity"]["degree"], 2);
  EXPECT_EQ(j["bound"]["n_factorial"], 2);
  EXPECT_EQ(j["bound"]["satisfied"], true);
  EXPECT_EQ(j["config"]["field"], "fp:10007");
  EXPECT_EQ(j["config"]["seed"], 1);
  ASSERT_TRUE(j["rational_lines"].is_array());
  EXPECT_EQ(j["rational_lines"].size(), 2u);
  for (const auto& l : j["rational_lines"]) EXPECT_TRUE(l["contained"].get<bool>());
  EXPECT_TRUE(integral(j));
}

TEST(Cli, AnalyzeRandomCubicThreefold) {
  const auto r = run({"analyze", "--example", "random:3:4:seed=7", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["sigma_infinity"]["dim"], 0);
  EXPECT_EQ(j["sigma_infinity"]["degree"], 6);
  EXPECT_EQ(j["bound"]["degree"], 6);
}

TEST(Cli, DegreeMismatchIsInputError) {
  const auto r = run({"analyze", "--degree", "3", "--vars", "4", "--poly", "x0+x1", "--point", "1,-1,0,0"});
  expect_error(r, 2, "input");
  EXPECT_TRUE(r.out.empty());
  // same without a point still fails on the degree first
  expect_error(run({"analyze", "--degree", "3", "--vars", "4", "--poly", "x0+x1"}), 2, "input");
}

TEST(Cli, InputErrors) {
  expect_error(run({"analyze", "--vars", "3", "--poly", "x0^2+x1", "--point", "0,0,1"}), 2, "input");
  expect_error(run({"analyze", "--example", "nope"}), 2, "input");
  expect_error(run({"analyze", "--example", "quadric-surface", "--poly", "x0", "--vars", "1"}), 2, "input");
  expect_error(run({"analyze"}), 2, "input");
  expect_error(run({"analyze", "--example", "quadric-surface", "--field", "fp:10"}), 2, "input");
  expect_error(run({"analyze", "--vars", "4", "--poly", "x0*x3-x1*x2", "--point", "0,1,1,0"}), 2, "input");
  expect_error(run({"analyze", "--vars", "4", "--poly", "x0*x3-x1*x2", "--point", "0,0,0,0"}), 2, "input");
  expect_error(run({"analyze", "--file", sample("does-not-exist.txt")}), 2, "input");
  expect_error(run({"analyze", "--example", "cone:quadric-surface:vertex"}), 2, "singular_point");
  expect_error(run({"frobnicate"}), 2, "usage");
  expect_error(run({"analyze", "--bogus"}), 2, "usage");
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", "--example", "plane-in-quartic", "--json"},
        std::vector<std::string>{"analyze", "--example", "random:3:4:seed=3"},
        std::vector<std::string>{"certify", "--example", "plane-in-quartic", "--k", "3", "--json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TextReport) {
  const auto r = run({"analyze", "--example", "quadric-surface"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n = 2"), std::string::npos);
  EXPECT_NE(r.out.find("Sigma^inf: dim 0, degree 2"), std::string::npos);
  EXPECT_NE(r.out.find("(satisfied)"), std::string::npos);
  EXPECT_NE(r.out.find("rational lines: 2"), std::string::npos);
}

TEST(Cli, Sigma) {
  auto r = run({"sigma", "--example", "quadric-surface", "--k", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["k"], "2");
  ASSERT_EQ(j["generators"].size(), 1u);
  EXPECT_EQ(j["generators"][0]["degree"], 2);
  EXPECT_EQ(j["dim"], 0);
  EXPECT_EQ(j["degree"], 2);
  r = run({"sigma", "--example", "random:3:4:seed=7", "--k", "inf", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j["k"], "inf");
  EXPECT_EQ(j["generators"].size(), 2u);
  EXPECT_EQ(j["degree"], 6);
  expect_error(run({"sigma", "--example", "quadric-surface", "--k", "1"}), 2, "input");
  expect_error(run({"sigma", "--example", "quadric-surface", "--k", "5"}), 2, "input");
  expect_error(run({"sigma", "--example", "quadric-surface"}), 2, "usage");
}

TEST(Cli, Certify) {
  auto r = run({"certify", "--example", "plane-in-quartic", "--k", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json c = Json::parse(r.out)["certificate"];
  EXPECT_TRUE(c["excess"].get<bool>());
  EXPECT_EQ(c["verdict"], "certified");
  // non-excess order on a general cubic threefold is still a valid request
  r = run({"certify", "--example", "random:3:4:seed=7", "--k", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(Json::parse(r.out)["certificate"]["excess"].get<bool>());
  expect_error(run({"certify", "--example", "random:3:4:seed=7", "--k", "inf"}), 2, "input");
  expect_error(run({"certify", "--example", "random:3:4:seed=7", "--k", "4"}), 2, "input");
}

TEST(Cli, Lines) {
  auto r = run({"lines", "--example", "quadric-surface", "--field", "fp:7", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["count"], 2);
  expect_error(run({"lines", "--example", "quadric-surface"}), 2, "field_too_large");
  expect_error(run({"lines", "--example", "quadric-surface", "--field", "q"}), 2, "input");
  r = run({"lines", "--example", "quadric-surface", "--field", "fp:10007", "--ceiling", "20000"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, Plane) {
  // the quartic contains the plane x0 = x1 = 0
  auto r = run({"plane", "--example", "plane-in-quartic", "--dirs", "0,0,0,1,0;0,0,0,0,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["contact_order"], "inf");
  EXPECT_TRUE(j["contained"].get<bool>());
  r = run({"plane", "--example", "quadric-surface", "--dirs", "0,1,0,0;0,0,1,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j["contact_order"], 1);
  // a line in the quadric
  r = run({"plane", "--example", "quadric-surface", "--dirs", "0,1,0,0", "--json"});
  EXPECT_EQ(Json::parse(r.out)["contact_order"], "inf");
  // a direction outside the tangent space meets X to order 0
  r = run({"plane", "--example", "quadric-surface", "--dirs", "0,0,0,1", "--json"});
  EXPECT_EQ(Json::parse(r.out)["contact_order"], 0);
  expect_error(run({"plane", "--example", "quadric-surface", "--dirs", "0,1,0,0;0,2,0,0"}), 2, "input");
  expect_error(run({"plane", "--example", "quadric-surface", "--dirs", "0,1,0,0;1,1,0,0"}), 2, "input");
}

TEST(Cli, ExampleRoundTripsThroughFile) {
  for (const char* key : {"quadric-surface", "random:3:4:seed=5", "plane-in-quartic:seed=2"}) {
    const auto printed = run({"example", "--example", key});
    ASSERT_EQ(printed.code, 0) << printed.err;
    const auto path = temp_file("roundtrip.txt", printed.out);
    const auto a = run({"analyze", "--example", key, "--json"});
    const auto b = run({"analyze", "--file", path.string(), "--json"});
    ASSERT_EQ(a.code, b.code) << b.err;
    Json ja = Json::parse(a.out), jb = Json::parse(b.out);
    // example-specific caveats are not part of the file format
    const auto fa = ja["flags"], fb = jb["flags"];
    ASSERT_LE(fb.size(), fa.size());
    EXPECT_TRUE(std::equal(fb.begin(), fb.end(), fa.end() - static_cast<long>(fb.size())));
    for (const char* k : {"config", "flags"}) {
      ja.erase(k);
      jb.erase(k);
    }
    EXPECT_EQ(ja, jb) << key;
    std::filesystem::remove(path);
  }
}

TEST(Cli, SampleFiles) {
  auto r = run({"analyze", "--file", sample("quadric.txt"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["variety"]["field"], "q");
  EXPECT_EQ(j["sigma_infinity"]["degree"], 2);
  EXPECT_TRUE(j["rational_lines"].is_null());
  // --field overrides the file directive
  r = run({"analyze", "--file", sample("quadric.txt"), "--field", "fp:101", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["variety"]["field"], "fp:101");
  // special point: Sigma^2 has excess dimension without being filled by lines
  r = run({"analyze", "--file", sample("fermat_cubic.txt"), "--json"});
  ASSERT_EQ(r.code, 1) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["certificates"][0]["k"], 2);
  EXPECT_EQ(j["certificates"][0]["verdict"], "refuted_witness");
  EXPECT_EQ(j["flags"].back(), "refuted_witness");
  r = run({"analyze", "--file", sample("two_quadrics.txt"), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["n"], 2);
}

TEST(Cli, BadFileDirective) {
  const auto p = temp_file("bad.txt", "vars x0 x1\nfrobnicate 3\npoly x0*x1\n");
  expect_error(run({"analyze", "--file", p.string()}), 2, "input");
  std::filesystem::remove(p);
}

TEST(Cli, Batch) {
  const std::string body = "# comment\n--example quadric-surface\n\n--example random:3:4:seed=7\n--example nope\n"
                           "--file \"" + sample("quadric.txt") + "\" --field fp:10007\n";
  const auto p = temp_file("batch.txt", body);
  const auto r = run({"analyze", "--batch", p.string()});
  EXPECT_EQ(r.code, 2);
  std::istringstream lines(r.out);
  std::vector<Json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(Json::parse(line));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["sigma_infinity"]["degree"], 2);
  EXPECT_EQ(rows[1]["sigma_infinity"]["degree"], 6);
  EXPECT_EQ(rows[2]["error"]["kind"], "input");
  EXPECT_EQ(rows[3]["variety"]["field"], "fp:10007");
  EXPECT_EQ(rows[3]["sigma_infinity"]["degree"], 2);
  // batch rows equal the standalone reports
  const auto single = run({"analyze", "--example", "random:3:4:seed=7", "--json"});
  Json a = Json::parse(single.out), b = rows[1];
  EXPECT_EQ(a.dump(), b.dump());
  std::filesystem::remove(p);
  expect_error(run({"analyze", "--batch", sample("missing-batch.txt")}), 2, "input");
}

TEST(Cli, BudgetExhaustion) {
  const auto r = run({"analyze", "--example", "random:3:4:seed=7", "--max-reductions", "3", "--json"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
  {
    EnvGuard env("3");
    const auto e = run({"analyze", "--example", "random:3:4:seed=7", "--json"});
    EXPECT_EQ(e.code, 3);
  }
  {
    EnvGuard env("lots");
    expect_error(run({"analyze", "--example", "quadric-surface"}), 2, "input");
  }
  EXPECT_EQ(run({"analyze", "--example", "quadric-surface"}).code, 0);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

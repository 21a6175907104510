#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "quatcurve/cli.hpp"

using namespace quatcurve;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "quatcurve");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

}  // namespace

TEST(Cli, FrenetExampleKappaColumn) {
  const CliRun r = run({"frenet", "--curve", "paper_example", "--from", "0", "--to", "6.283", "--n", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 101u);
  ASSERT_EQ(rows[0].size(), 25u);
  EXPECT_EQ(rows[0].front(), "s");
  EXPECT_EQ(rows[0].back(), "eta");
  const std::size_t k = column(rows[0], "kappa");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(std::stod(rows[i][k]), std::sqrt(2.0) / 4, 1e-12);
}

TEST(Cli, GridSizes) {
  const CliRun one = run({"frenet", "--curve", "double_helix", "--n", "1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(parse_csv(one.out).size(), 2u);
  const CliRun none = run({"associate", "--curve", "paper_example", "--n", "0"});
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "s,ax,ay,az\n");
  const CliRun dflt = run({"frenet", "--curve", "circular4"});
  EXPECT_EQ(parse_csv(dflt.out).size(), 513u);
}

TEST(Cli, InvoluteColumnsAndExclusion) {
  const CliRun r = run({"involute", "--curve", "paper_example", "--c", "4", "--from", "0", "--to", "6.283185307179586",
                     "--n", "201"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const auto& h = rows[0];
  ASSERT_EQ(h.size(), 28u);
  const std::size_t s_col = column(h, "s"), x1 = column(h, "x1"), x3 = column(h, "x3");
  const std::size_t lam = column(h, "lambda"), dist = column(h, "distance");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double s = std::stod(rows[i][s_col]);
    const double cs = std::cos(s / 2), sn = std::sin(s / 2);
    EXPECT_NEAR(std::stod(rows[i][x1]), ((-2 + s) * cs + (-6 + s) * sn) / 2, 1e-9);
    EXPECT_NEAR(std::stod(rows[i][x3]), 2.0, 1e-12);
    EXPECT_NEAR(std::stod(rows[i][lam]), 4 - s, 1e-15);
    EXPECT_NEAR(std::stod(rows[i][dist]), std::abs(4 - s), 1e-9);
  }
  // The example involute has k* = 0, so every point is reported as skipped.
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, InvoluteOfHelixKeepsFullDomainWhenCIsOutside) {
  const CliRun r = run({"involute", "--curve", "double_helix", "--c", "20", "--n", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 65u);
  EXPECT_TRUE(r.err.empty()) << r.err;
  const CliRun inside = run({"involute", "--curve", "double_helix", "--c", "2", "--from", "1.9", "--to", "2.1",
                          "--n", "3"});
  ASSERT_EQ(inside.code, 0);
  EXPECT_EQ(parse_csv(inside.out).size(), 3u);
  EXPECT_NE(inside.err.find("skipped s = 2"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"associate", "--curve", "double_helix", "--n", "50", "--frames"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_csv(a.out)[0].size(), 13u);
  EXPECT_EQ(run({"verify", "--json"}).out, run({"verify", "--json"}).out);
}

TEST(Cli, VerifySuitesAndFaultInjection) {
  const CliRun all = run({"verify", "--suite", "all", "--json"});
  ASSERT_EQ(all.code, 0) << all.out;
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["overall_pass"].get<bool>());
  EXPECT_EQ(j["resolved_sign"]["sign"], 1);

  const auto algebra = nlohmann::json::parse(run({"verify", "--suite", "algebra", "--json"}).out);
  for (const auto& c : algebra["checks"]) EXPECT_EQ(c["id"].get<std::string>().rfind("algebra.", 0), 0u);
  EXPECT_TRUE(algebra["resolved_sign"].is_null());

  const CliRun broken = run({"verify", "--suite", "frenet", "--inject-flip-eta"});
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("FAIL  frenet.determinant"), std::string::npos);

  EXPECT_EQ(run({"verify", "--suite", "algebra", "--tol", "1e-30"}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
}

TEST(Cli, EnvironmentTolerance) {
  ::setenv("QUATCURVE_TOL", "1e-30", 1);
  EXPECT_EQ(run({"verify", "--suite", "algebra"}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "algebra", "--tol", "1e-9"}).code, 0);
  ::setenv("QUATCURVE_TOL", "abc", 1);
  EXPECT_EQ(run({"verify", "--suite", "algebra"}).code, 2);
  ::unsetenv("QUATCURVE_TOL");
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frenet"}).code, 2);
  EXPECT_EQ(run({"frenet", "--curve", "no_such_curve"}).code, 2);
  EXPECT_EQ(run({"frenet", "--curve", "paper_example", "--from", "3", "--to", "1"}).code, 2);
  EXPECT_EQ(run({"involute", "--curve", "paper_example"}).code, 2);
  EXPECT_EQ(run({"associate", "--curve", "paper_example", "--anchor", "1,2"}).code, 2);
  const CliRun r = run({"frenet", "--curve", "no_such_curve"});
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFileWrittenOnlyOnSuccess) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "quatcurve_cli_test";
  fs::create_directories(dir);
  const fs::path good = dir / "good.csv";
  const fs::path bad = dir / "bad.csv";
  fs::remove(good);
  fs::remove(bad);
  ASSERT_EQ(run({"frenet", "--curve", "paper_example", "--n", "5", "--out", good.string()}).code, 0);
  std::ifstream in(good);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(parse_csv(content.str()).size(), 6u);
  EXPECT_EQ(run({"frenet", "--curve", "missing.json", "--out", bad.string()}).code, 2);
  EXPECT_FALSE(fs::exists(bad));
  EXPECT_FALSE(fs::exists(dir / "good.csv.tmp"));
  fs::remove_all(dir);
}

TEST(Cli, JsonSpecFile) {
  namespace fs = std::filesystem;
  const fs::path spec = fs::temp_directory_path() / "quatcurve_spec_test.json";
  std::ofstream(spec) << R"({"type":"circular4","A":0.6,"omega":1,"B":0.48,"C":0.64,"domain":[0,1]})";
  const CliRun r = run({"frenet", "--curve", spec.string(), "--n", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows.back()[0], "1");
  fs::remove(spec);
}

// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "revsurf/mesh_io.hpp"
#include "revsurf/quadrature.hpp"

namespace revsurf::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmpdir() {
  const std::filesystem::path dir = REVSURF_TEST_TMPDIR;
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(ParseLength, Forms) {
  EXPECT_NEAR(*parse_length("pi"), 3.141592653589793, 1e-15);
  EXPECT_NEAR(*parse_length("2pi"), 6.283185307179586, 1e-15);
  EXPECT_NEAR(*parse_length("2*pi"), 6.283185307179586, 1e-15);
  EXPECT_EQ(*parse_length("1.5"), 1.5);
  EXPECT_FALSE(parse_length("0"));
  EXPECT_FALSE(parse_length("-1"));
  EXPECT_FALSE(parse_length("tau"));
  EXPECT_FALSE(parse_length(""));
}

TEST(Validate, ExitCodes) {
  EXPECT_EQ(run_cli({"validate", "--preset", "sphere"}).code, kExitOk);

  const Result line = run_cli({"validate", "--profile", "s", "--length", "1"});
  EXPECT_EQ(line.code, kExitNegative);
  EXPECT_NE(line.out.find("invalid"), std::string::npos);

  const Result parse = run_cli({"validate", "--profile", "sin(s", "--length", "pi"});
  EXPECT_EQ(parse.code, kExitError);
  EXPECT_NE(parse.err.find("offset 5"), std::string::npos) << parse.err;
}

TEST(Validate, JsonReportsResidual) {
  const Result r = run_cli({"validate", "--profile", "s", "--length", "1", "--json"});
  EXPECT_EQ(r.code, kExitNegative);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("conditions")[1].at("name"), "a_end");
  EXPECT_NEAR(j.at("conditions")[1].at("residual").get<double>(), 1.0, 1e-15);
}

TEST(Usage, ProfileSourceErrors) {
  EXPECT_EQ(run_cli({}).code, kExitError);
  EXPECT_EQ(run_cli({"check"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--preset", "sphere", "--profile", "sin(s)"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--profile", "sin(s)"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--profile", "sin(s)", "--length", "zero"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--preset", "torus"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--preset", "sphere", "--grid", "10"}).code, kExitError);
  EXPECT_EQ(run_cli({"check", "--profile-csv", "/nonexistent/p.csv"}).code, kExitError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitError);
}

TEST(Check, Verdicts) {
  EXPECT_EQ(run_cli({"check", "--preset", "sphere"}).code, kExitOk);
  EXPECT_EQ(run_cli({"check", "--preset", "dumbbell:0.25"}).code, kExitOk);
  EXPECT_EQ(run_cli({"check", "--profile", "sin(s)", "--length", "pi"}).code, kExitOk);
  // Fails the closure conditions, so no verdict is attempted.
  EXPECT_EQ(run_cli({"check", "--profile", "s*(pi-s)", "--length", "pi"}).code, kExitError);
}

TEST(Check, BumpJson) {
  const Result r = run_cli({"check", "--preset", "bump:0.5", "--json"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_TRUE(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "not_embeddable");
  EXPECT_NEAR(j.at("sup_a_prime").at("value").get<double>(), 1.2423, 1e-4);
  for (const char* key : {"criteria", "pole_curvature", "grid_n", "tol"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("grid_n"), 4096);
  EXPECT_NEAR(j.at("pole_curvature").at("np").get<double>(), -2.0, 1e-6);
}

TEST(Check, DeterministicOutput) {
  const std::vector<std::string> args = {"check", "--preset", "dumbbell:0.2", "--json",
                                         "--grid", "1024"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  const Result h1 = run_cli({"check", "--preset", "bump:0.5"});
  const Result h2 = run_cli({"check", "--preset", "bump:0.5"});
  EXPECT_EQ(h1.out, h2.out);
  EXPECT_NE(h1.out.find("tol = 1e-09"), std::string::npos) << h1.out;
}

TEST(Curvature, Examples) {
  const Result sphere = run_cli({"curvature", "--preset", "sphere", "--samples", "5"});
  ASSERT_EQ(sphere.code, kExitOk);
  std::istringstream in(sphere.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "s,a,a_prime,K");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const double K = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_NEAR(K, 1.0, 1e-9);
  }
  EXPECT_EQ(rows, 5);

  const Result bump = run_cli({"curvature", "--preset", "bump:0.5"});
  ASSERT_EQ(bump.code, kExitOk);
  std::istringstream bin(bump.out);
  std::getline(bin, line);
  std::getline(bin, line);
  EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), -2.0, 1e-6);

  EXPECT_EQ(run_cli({"curvature", "--preset", "sphere", "--samples", "1"}).code, kExitError);
}

TEST(Curvature, WritesFile) {
  const auto path = tmpdir() / "k.csv";
  const Result r =
      run_cli({"curvature", "--preset", "sphere", "--samples", "7", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 8);
  EXPECT_EQ(run_cli({"curvature", "--preset", "sphere", "--out",
                     (tmpdir() / "missing" / "k.csv").string()})
                .code,
            kExitError);
}

TEST(Curvature, SampledProfile) {
  const auto path = tmpdir() / "profile.csv";
  {
    std::ofstream out(path);
    out.precision(17);
    out << "s,a\n";
    for (int i = 0; i <= 100; ++i) {
      const double s = 3.141592653589793 * i / 100.0;
      out << s << "," << (i == 100 ? 0.0 : std::sin(s)) << "\n";
    }
  }
  EXPECT_EQ(run_cli({"check", "--profile-csv", path.string()}).code, kExitOk);
  EXPECT_EQ(run_cli({"curvature", "--profile-csv", path.string(), "--samples", "3"}).code,
            kExitOk);
}

TEST(Embed, SphereObj) {
  const auto path = tmpdir() / "s.obj";
  const Result r = run_cli(
      {"embed", "--preset", "sphere", "--ns", "64", "--ntheta", "64", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("4034 vertices"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max |E-1|"), std::string::npos);
  std::ifstream in(path);
  const Mesh mesh = read_obj(in);
  EXPECT_EQ(mesh.vertices.size(), 4034u);
  EXPECT_EQ(analyze_topology(mesh).euler_characteristic(), 2);
}

TEST(Embed, DumbbellStl) {
  const auto path = tmpdir() / "d.stl";
  const Result r = run_cli({"embed", "--preset", "dumbbell:0.25", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::filesystem::file_size(path), 84u + 50u * 2u * 64u * 127u);
}

TEST(Embed, Failures) {
  const Result bump =
      run_cli({"embed", "--preset", "bump:0.5", "--out", (tmpdir() / "x.obj").string()});
  EXPECT_EQ(bump.code, kExitNegative);
  EXPECT_NE(bump.err.find("1.2422"), std::string::npos) << bump.err;

  EXPECT_EQ(run_cli({"embed", "--preset", "sphere", "--out", (tmpdir() / "x.ply").string()}).code,
            kExitError);
  EXPECT_EQ(run_cli({"embed", "--preset", "sphere"}).code, kExitError);
  EXPECT_EQ(run_cli({"embed", "--preset", "sphere", "--ns", "2", "--out",
                     (tmpdir() / "x.obj").string()})
                .code,
            kExitError);
  EXPECT_EQ(run_cli({"embed", "--preset", "sphere", "--c", "5", "--out",
                     (tmpdir() / "x.obj").string()})
                .code,
            kExitError);
  EXPECT_EQ(run_cli({"embed", "--preset", "sphere", "--out",
                     (tmpdir() / "missing" / "x.obj").string()})
                .code,
            kExitError);
}

TEST(Environment, QuadratureBudget) {
  const std::size_t saved = default_quadrature_budget();
  const std::string out = (tmpdir() / "b.obj").string();

  ::setenv("REVSURF_QUAD_BUDGET", "abc", 1);
  EXPECT_EQ(run_cli({"presets"}).code, kExitError);

  ::setenv("REVSURF_QUAD_BUDGET", "20", 1);
  const Result starved = run_cli({"embed", "--preset", "sphere", "--out", out});
  EXPECT_EQ(starved.code, kExitError);
  EXPECT_NE(starved.err.find("budget"), std::string::npos) << starved.err;

  ::setenv("REVSURF_QUAD_BUDGET", "5000000", 1);
  EXPECT_EQ(run_cli({"embed", "--preset", "sphere", "--out", out}).code, kExitOk);
  EXPECT_EQ(default_quadrature_budget(), 5000000u);

  ::unsetenv("REVSURF_QUAD_BUDGET");
  set_default_quadrature_budget(saved);
}

TEST(Presets, Lists) {
  const Result r = run_cli({"presets"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* name : {"sphere", "bump:<beta>", "dumbbell:<beta>"}) {
    EXPECT_NE(r.out.find(name), std::string::npos);
  }
}

}  // namespace
}  // namespace revsurf::cli

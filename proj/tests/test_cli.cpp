/*
 * Copyright 2026 The ltube Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LTUBE_CLI_PATH
#error "LTUBE_CLI_PATH must point at the ltube_cli binary"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LTUBE_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  std::FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "ltube_cli_" + name; }

}  // namespace

TEST(Cli, MeshCountsAndDeterminism) {
  const CliRun a = run("mesh --curve helix --radius 0.3 --grid 64x128 --out " + tmp("a.obj"));
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("8192 vertices, 16128 triangles"), std::string::npos);
  ASSERT_EQ(run("mesh --curve helix --radius 0.3 --grid 64x128 --out " + tmp("b.obj")).code, 0);
  EXPECT_EQ(slurp(tmp("a.obj")), slurp(tmp("b.obj")));
}

TEST(Cli, CurvatureRowsAndDeterminism) {
  ASSERT_EQ(run("curvature --curve polynomial --radius 0.2 --grid 16x32 --out " + tmp("a.csv")).code, 0);
  ASSERT_EQ(run("curvature --curve polynomial --radius 0.2 --grid 16x32 --out " + tmp("b.csv")).code, 0);
  const std::string a = slurp(tmp("a.csv"));
  EXPECT_EQ(a, slurp(tmp("b.csv")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 16 * 32 + 1);
}

TEST(Cli, RadiusTooLargeExitsTwo) {
  const CliRun r = run("mesh --curve helix --radius 1.2 --out " + tmp("x.obj"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("radius must be <"), std::string::npos) << r.out;
}

TEST(Cli, CylinderNeedsFrame) {
  EXPECT_EQ(run("mesh --curve line --radius 1 --frame 0,1,0,0,0,1 --normals --out " + tmp("c.obj")).code, 0);
  EXPECT_NE(run("mesh --curve line --radius 1 --out " + tmp("c.obj")).code, 0);
  EXPECT_EQ(run("mesh --curve line --radius 1 --frame 0,1,0 --out " + tmp("c.obj")).code, 64);
}

TEST(Cli, IoFailureExitsThree) {
  EXPECT_EQ(run("mesh --curve helix --radius 0.1 --out /nonexistent/dir/x.obj").code, 3);
  EXPECT_EQ(run("classify --curve /nonexistent/curve.csv --radius 0.1").code, 3);
}

TEST(Cli, MalformedCsvExitsFourWithLine) {
  const std::string path = tmp("bad.csv");
  std::ofstream(path) << "s,y1,y2,y3\n0,0,0,0\n0.1,0.2,oops,0\n";
  const CliRun r = run("classify --curve " + path + " --radius 0.1");
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("mesh --curve helix --out x.obj --unknown-flag").code, 64);
  EXPECT_EQ(run("mesh --curve helix --grid 4x64 --out x.obj").code, 64);
  EXPECT_EQ(run("mesh --curve helix --grid 64x8 --out x.obj").code, 64);
  EXPECT_EQ(run("mesh --curve helix --grid 64 --out x.obj").code, 64);
  EXPECT_EQ(run("mesh --curve helix --radius 0 --out x.obj").code, 64);
  EXPECT_EQ(run("").code, 64);
}

TEST(Cli, ClassifyHelixPasses) {
  const CliRun r = run("classify --curve helix --radius 0.1");
  EXPECT_EQ(r.code, 0) << r.out;
  for (const char* id : {"PASS W.KH ", "PASS W.KII.const ", "PASS LW.KH.coeffs ", "PASS LW.KII "}) {
    EXPECT_NE(r.out.find(id), std::string::npos) << id;
  }
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ClassifyVaryingCurvatureUsesContrapositive) {
  const CliRun r = run("classify --curve polynomial --radius 0.1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS W.KII.varying"), std::string::npos);
}

TEST(Cli, ClassifyFailureExitsOne) {
  EXPECT_EQ(run("classify --curve helix --radius 0.1 --tol-w-kh -1").code, 1);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run("verify --curve helix --radius 0.1 --grid 32x64");
  const CliRun b = run("verify --curve helix --radius 0.1 --grid 32x64");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("FINDING V.H.sign"), std::string::npos);
}

TEST(Cli, SampledCurveIsReparametrized) {
  const std::string path = tmp("poly.csv");
  {
    std::ofstream out(path);
    out << "s,y1,y2,y3\n";
    char buf[128];
    for (int i = 0; i < 400; ++i) {
      const double u = -0.5 + i / 399.0;
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", u, 2 * u, u * u, u * u * u / 3);
      out << buf;
    }
  }
  const CliRun r = run("curvature --curve " + path + " --radius 0.2 --grid 16x32 --out " + tmp("s.csv"));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, SuiteSubcommand) {
  const CliRun r = run("suite --grid 16x32");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("SUMMARY"), std::string::npos);
}

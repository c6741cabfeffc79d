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

#include <cmath>
#include <cstdio>
#include <string>

#include "ltube/ltube.h"

namespace {

ltube_curve* helix() {
  ltube_curve* c = nullptr;
  EXPECT_EQ(ltube_curve_preset("helix", nullptr, 0, &c), LTUBE_OK);
  return c;
}

}  // namespace

TEST(CApi, CurveLifecycleAndFrenet) {
  ltube_curve* c = helix();
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(ltube_curve_is_unit_speed(c), 1);
  double lo = 0, hi = 0;
  EXPECT_EQ(ltube_curve_domain(c, &lo, &hi), LTUBE_OK);
  EXPECT_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 2 * M_PI, 1e-15);
  ltube_frenet f;
  EXPECT_EQ(ltube_curve_frenet(c, 1.0, &f), LTUBE_OK);
  EXPECT_NEAR(f.kappa, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(f.tau), std::sqrt(2.0), 1e-12);
  ltube_curve_free(c);
  ltube_curve_free(nullptr);
}

TEST(CApi, PresetParams) {
  const double p[] = {2.0, 1.0, 1.0};
  ltube_curve* c = nullptr;
  EXPECT_EQ(ltube_curve_preset("helix", p, 3, &c), LTUBE_OK);
  EXPECT_EQ(ltube_curve_is_unit_speed(c), 0);
  ltube_curve* u = nullptr;
  EXPECT_EQ(ltube_curve_unit_speed(c, 0, &u), LTUBE_OK);
  EXPECT_EQ(ltube_curve_is_unit_speed(u), 1);
  ltube_frenet f;
  EXPECT_EQ(ltube_curve_frenet(c, 0.5, &f), LTUBE_ERR_PARAM_DOMAIN);
  EXPECT_EQ(ltube_curve_frenet(u, 0.5, &f), LTUBE_OK);
  EXPECT_NEAR(f.kappa, 1.0 / 3.0, 1e-9);  // b w^2 / (a^2 - b^2 w^2)
  ltube_curve_free(c);
  ltube_curve_free(u);
  EXPECT_EQ(ltube_curve_preset("circle", nullptr, 0, &c), LTUBE_ERR_PARAM_DOMAIN);
  EXPECT_EQ(c, nullptr);
  EXPECT_NE(std::string(ltube_last_error()).find("circle"), std::string::npos);
  EXPECT_EQ(ltube_curve_preset_known("polynomial"), 1);
  EXPECT_EQ(ltube_curve_preset_known("x.csv"), 0);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(ltube_curve_preset(nullptr, nullptr, 0, nullptr), LTUBE_ERR_NULL_ARGUMENT);
  EXPECT_EQ(ltube_tube_create(nullptr, 0.1, nullptr), LTUBE_ERR_NULL_ARGUMENT);
  EXPECT_EQ(ltube_theorem_suite(nullptr, nullptr, nullptr), LTUBE_ERR_NULL_ARGUMENT);
  EXPECT_STREQ(ltube_status_name(LTUBE_ERR_NULL_ARGUMENT), "NullArgument");
  EXPECT_STREQ(ltube_status_name(LTUBE_ERR_RADIUS_TOO_LARGE), "RadiusTooLarge");
}

TEST(CApi, TubeErrorsMapToStatus) {
  ltube_curve* c = helix();
  ltube_tube* t = nullptr;
  EXPECT_EQ(ltube_tube_create(c, 1.2, &t), LTUBE_ERR_RADIUS_TOO_LARGE);
  EXPECT_EQ(t, nullptr);
  EXPECT_NE(std::string(ltube_last_error()).find("sup kappa"), std::string::npos);
  ltube_curve* line = nullptr;
  ASSERT_EQ(ltube_curve_preset("line", nullptr, 0, &line), LTUBE_OK);
  EXPECT_EQ(ltube_tube_create(line, 0.5, &t), LTUBE_ERR_VANISHING_CURVATURE);
  const double n[] = {0, 1, 0}, b[] = {0, 0, 1}, bad[] = {1, 0, 0};
  EXPECT_EQ(ltube_tube_cylinder(line, 1.0, n, bad, &t), LTUBE_ERR_PARAM_DOMAIN);
  EXPECT_EQ(ltube_tube_cylinder(line, 1.0, n, b, &t), LTUBE_OK);
  ltube_tube_free(t);
  ltube_curve_free(line);
  ltube_curve_free(c);
}

TEST(CApi, Evaluate) {
  ltube_curve* c = helix();
  ltube_tube* t = nullptr;
  ASSERT_EQ(ltube_tube_create(c, 0.1, &t), LTUBE_OK);
  double sup = 0;
  EXPECT_EQ(ltube_tube_kappa_sup(t, &sup), LTUBE_OK);
  EXPECT_NEAR(sup, 1.0, 1e-12);
  ltube_point p;
  ASSERT_EQ(ltube_tube_evaluate(t, 1.0, 0.3, &p), LTUBE_OK);
  EXPECT_NEAR(p.alpha, 1 + 0.1 * std::cos(0.3), 1e-12);
  EXPECT_NEAR(p.H_paper, -p.H_oracle, 1e-9);
  EXPECT_EQ(p.kii_valid, 1);
  EXPECT_NEAR(p.E * p.G - p.F * p.F, -p.alpha * p.alpha * 0.01, 1e-12);
  ASSERT_EQ(ltube_tube_evaluate(t, 1.0, M_PI / 2, &p), LTUBE_OK);
  EXPECT_EQ(p.kii_valid, 0);
  EXPECT_TRUE(std::isnan(p.K_II));
  EXPECT_EQ(ltube_tube_evaluate(t, 50.0, 0.3, &p), LTUBE_ERR_DOMAIN_VIOLATION);
  ltube_tube_free(t);
  ltube_curve_free(c);
}

TEST(CApi, Writers) {
  ltube_curve* c = helix();
  ltube_tube* t = nullptr;
  ASSERT_EQ(ltube_tube_create(c, 0.3, &t), LTUBE_OK);
  const std::string obj = ::testing::TempDir() + "capi.obj";
  const std::string csv = ::testing::TempDir() + "capi.csv";
  size_t nv = 0, nf = 0, rows = 0;
  EXPECT_EQ(ltube_tube_write_obj(t, 64, 128, 0, obj.c_str(), &nv, &nf), LTUBE_OK);
  EXPECT_EQ(nv, 8192u);
  EXPECT_EQ(nf, 16128u);
  EXPECT_EQ(ltube_tube_write_curvature_csv(t, 16, 32, csv.c_str(), &rows), LTUBE_OK);
  EXPECT_EQ(rows, 512u);
  EXPECT_EQ(ltube_tube_write_obj(t, 8, 16, 0, "/nonexistent/x.obj", nullptr, nullptr), LTUBE_ERR_IO);
  std::remove(obj.c_str());
  std::remove(csv.c_str());
  ltube_tube_free(t);
  ltube_curve_free(c);
}

TEST(CApi, CsvCurve) {
  const std::string path = ::testing::TempDir() + "capi_curve.csv";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fprintf(f, "s,y1,y2,y3\n");
    for (int i = 0; i < 200; ++i) {
      const double u = -0.5 + i / 199.0;
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", u, 2 * u, u * u, u * u * u / 3);
    }
    std::fclose(f);
  }
  ltube_curve* c = nullptr;
  ASSERT_EQ(ltube_curve_from_csv(path.c_str(), &c), LTUBE_OK);
  EXPECT_EQ(ltube_curve_is_unit_speed(c), 0);
  ltube_curve* u = nullptr;
  ASSERT_EQ(ltube_curve_unit_speed(c, 0, &u), LTUBE_OK);
  ltube_tube* t = nullptr;
  EXPECT_EQ(ltube_tube_create(u, 0.2, &t), LTUBE_OK);
  ltube_tube_free(t);
  ltube_curve_free(u);
  ltube_curve_free(c);
  std::remove(path.c_str());
  EXPECT_EQ(ltube_curve_from_csv("/nonexistent.csv", &c), LTUBE_ERR_IO);
}

TEST(CApi, Reports) {
  ltube_curve* c = helix();
  ltube_tube* t = nullptr;
  ASSERT_EQ(ltube_tube_create(c, 0.1, &t), LTUBE_OK);
  ltube_options o;
  ltube_options_default(&o);
  EXPECT_EQ(o.nt, 64);
  EXPECT_EQ(o.ntheta, 128);
  o.nt = 16;
  o.ntheta = 32;
  char* text = nullptr;
  int pass = 0;
  ASSERT_EQ(ltube_tube_classify(t, "helix", &o, &text, &pass), LTUBE_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_NE(std::string(text).find("PASS W.KH fixture=helix"), std::string::npos);
  ltube_string_free(text);
  ASSERT_EQ(ltube_tube_verify(t, "helix", &o, &text, &pass), LTUBE_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_NE(std::string(text).find("FINDING V.H.sign"), std::string::npos);
  ltube_string_free(text);
  o.tol_K = -1.0;
  ASSERT_EQ(ltube_tube_verify(t, "helix", &o, &text, &pass), LTUBE_OK);
  EXPECT_EQ(pass, 0);
  ltube_string_free(text);
  ltube_tube_free(t);
  ltube_curve_free(c);
}

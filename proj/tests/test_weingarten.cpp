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
#include <random>
#include <vector>

#include "ltube/error.hpp"
#include "ltube/weingarten.hpp"

using namespace ltube;

namespace {

TimelikeCurve helix() { return make_analytic_curve(CurvePreset::TimelikeHelix, {}); }
TimelikeCurve poly() {
  return reparametrize_unit_speed(make_analytic_curve(CurvePreset::PolynomialTimelike, {}, false));
}
TimelikeCurve line() { return make_analytic_curve(CurvePreset::TimelikeLine, {}, false); }

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

}  // namespace

TEST(Jacobi, KHVanishesOnEveryTube) {
  for (const TimelikeCurve& c : {helix(), poly()}) {
    const TubeSurface tube = make_tube(c, 0.2);
    const TubeGrid g = make_tube_grid(tube, 32, 64);
    const JacobiField j = jacobi_field(curvature_field(tube, g, CurvatureKind::K),
                                       curvature_field(tube, g, CurvatureKind::H));
    EXPECT_LE(j.max_normalized(), 1e-10) << c.label();
  }
}

TEST(Jacobi, KIIPairsSeparateConstantFromVaryingCurvature) {
  for (WeingartenPair p : {WeingartenPair::KKII, WeingartenPair::HKII}) {
    const TubeSurface h = make_tube(helix(), 0.2);
    const WeingartenReport rh = weingarten_report(h, make_tube_grid(h, 32, 64), p);
    EXPECT_TRUE(rh.verdict);
    EXPECT_LE(rh.max_normalized_phi, 1e-8);
    EXPECT_TRUE(rh.kappa_prime.constant(1e-8));
    const TubeSurface q = make_tube(poly(), 0.2);
    const WeingartenReport rq = weingarten_report(q, make_tube_grid(q, 32, 64), p);
    EXPECT_FALSE(rq.verdict);
    EXPECT_GT(rq.max_normalized_phi, 1e-2);
  }
}

TEST(Jacobi, FiniteDifferencePartialsAgree) {
  WeingartenOptions o;
  o.partials = PartialsSource::FiniteDifference;
  const TubeSurface tube = make_tube(poly(), 0.1);
  const TubeGrid g = make_tube_grid(tube, 32, 64);
  const CurvatureField a = curvature_field(tube, g, CurvatureKind::KII);
  const CurvatureField b = curvature_field(tube, g, CurvatureKind::KII, o);
  for (std::size_t k = 0; k < a.value.size(); ++k) {
    if (!a.valid[k]) continue;
    const double s = std::max(std::abs(a.d_t[k]), std::abs(a.d_theta[k]));
    EXPECT_NEAR(a.d_t[k], b.d_t[k], 1e-6 * s);
    EXPECT_NEAR(a.d_theta[k], b.d_theta[k], 1e-6 * s);
  }
}

TEST(Jacobi, GridMismatch) {
  const TubeSurface tube = make_tube(helix(), 0.1);
  const CurvatureField a = curvature_field(tube, make_tube_grid(tube, 8, 16), CurvatureKind::K);
  const CurvatureField b = curvature_field(tube, make_tube_grid(tube, 8, 32), CurvatureKind::H);
  EXPECT_EQ(code_of([&] { jacobi_field(a, b); }), ErrorCode::GridMismatch);
}

TEST(Weingarten, CylinderKIIPairsNeedCoverage) {
  const TubeSurface cyl = make_cylinder(line(), 1.0, {{0, 1, 0}, {0, 0, 1}});
  const TubeGrid g = make_tube_grid(cyl, 8, 16);
  EXPECT_EQ(code_of([&] { weingarten_report(cyl, g, WeingartenPair::KKII); }), ErrorCode::InsufficientValidGrid);
  EXPECT_TRUE(weingarten_report(cyl, g, WeingartenPair::KH).verdict);
}

TEST(TrigCoefficients, RecoversKnownPolynomial) {
  std::vector<double> th, v, w;
  for (int j = 0; j < 64; ++j) {
    const double x = (j + 0.5) * 2 * M_PI / 64;
    const double c = std::cos(x);
    th.push_back(x);
    v.push_back(1.5 - 2 * c + 0.25 * c * c * c);
    w.push_back((0.5 + 3 * c * c) * std::sin(x));
  }
  const TrigFit f = trig_coefficients(th, v, TrigBasis::CosPowers, 4);
  const std::vector<double> want{1.5, -2, 0, 0.25, 0};
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(f.coefficients[k], want[k], 1e-12);
  EXPECT_LT(f.residual_rms, 1e-13);
  const TrigFit s = trig_coefficients(th, w, TrigBasis::CosPowersTimesSin, 2);
  EXPECT_NEAR(s.coefficients[0], 0.5, 1e-12);
  EXPECT_NEAR(s.coefficients[1], 0.0, 1e-12);
  EXPECT_NEAR(s.coefficients[2], 3.0, 1e-12);
}

TEST(TrigCoefficients, Preconditions) {
  const std::vector<double> th{0.1, 0.2, 0.3};
  const std::vector<double> v{1, 2, 3};
  EXPECT_EQ(code_of([&] { trig_coefficients(th, v, TrigBasis::CosPowers, 2); }), ErrorCode::ParamDomain);
  // theta clustered at one point makes cos powers collinear
  std::vector<double> tt(20, 0.0), vv(20, 1.0);
  for (int i = 0; i < 20; ++i) tt[i] = 1e-3 * i;
  EXPECT_EQ(code_of([&] { trig_coefficients(tt, vv, TrigBasis::CosPowers, 4); }), ErrorCode::IllConditionedFit);
}

TEST(LinearWeingarten, CylinderFamily) {
  const double r = 1.0;
  const TubeSurface cyl = make_cylinder(line(), r, {{0, 1, 0}, {0, 0, 1}});
  const TubeGrid g = make_tube_grid(cyl, 8, 32);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int i = 0; i < 10; ++i) {
    const double a = U(rng), c = U(rng);
    const LinearWeingartenResult res = linear_weingarten_residual(cyl, g, WeingartenPair::KH, a, -2 * r * c, c);
    EXPECT_LE(res.max_residual, 1e-12);
    EXPECT_TRUE(res.verdict);
  }
  const LinearWeingartenResult off = linear_weingarten_residual(cyl, g, WeingartenPair::KH, 1, 1, 1);
  EXPECT_FALSE(off.verdict);
  EXPECT_EQ(code_of([&] { linear_weingarten_residual(cyl, g, WeingartenPair::KH, 0, 0, 0); }),
            ErrorCode::TrivialRelation);
}

TEST(LinearWeingarten, CurvedTubeRelationWithACR2) {
  // a = -c r^2, b = -2 r c makes a K + b H = c on any tube
  for (const TimelikeCurve& cv : {helix(), poly()}) {
    const double r = 0.2, c = 0.7;
    const TubeSurface tube = make_tube(cv, r);
    const LinearWeingartenResult res =
        linear_weingarten_residual(tube, make_tube_grid(tube, 16, 32), WeingartenPair::KH, -c * r * r, -2 * r * c, c);
    EXPECT_LE(res.max_normalized, 1e-12);
  }
}

TEST(LinearWeingarten, NoKIIRelationOnCurvedTubes) {
  for (const TimelikeCurve& cv : {helix(), poly()}) {
    const TubeSurface tube = make_tube(cv, 0.1);
    const TubeGrid g = make_tube_grid(tube, 32, 64);
    for (WeingartenPair p : {WeingartenPair::KKII, WeingartenPair::HKII}) {
      const LinearRelationFit f = best_linear_relation(tube, g, p);
      EXPECT_GT(f.normalized_residual, 1e-5) << cv.label();
    }
  }
}

TEST(LinearWeingarten, BestFitFindsKHRelation) {
  const TubeSurface tube = make_tube(helix(), 0.2);
  const LinearRelationFit f = best_linear_relation(tube, make_tube_grid(tube, 16, 64), WeingartenPair::KH);
  EXPECT_LT(f.normalized_residual, 1e-10);
  EXPECT_NEAR(f.b / f.c, -2 * 0.2, 1e-8);
}

TEST(Suite, DefaultFixturesPass) {
  const std::vector<Fixture> fx = default_fixtures();
  ASSERT_EQ(fx.size(), 4u);
  const VerificationReport rep = theorem_suite(fx, default_radii());
  EXPECT_TRUE(rep.all_pass()) << rep.text();
  EXPECT_EQ(rep.count(CheckStatus::Fail), 0u);
  EXPECT_NE(rep.find("W.KII.varying", "polynomial@r=0.1"), nullptr);
  EXPECT_NE(rep.find("LW.KH.extract"), nullptr);
  EXPECT_NE(rep.find("LW.KH.hypothesis"), nullptr);
  const std::string text = rep.text();
  EXPECT_NE(text.find("SUMMARY pass="), std::string::npos);
}

TEST(Suite, ThresholdsAreHonoured) {
  // an impossible W.KH tolerance must produce FAIL lines
  SuiteOptions o;
  o.nt = 16;
  o.ntheta = 32;
  o.thresholds.kh_max_phi = -1.0;
  const std::vector<Fixture> fx = default_fixtures();
  const VerificationReport rep = theorem_suite(std::span(fx).first(1), default_radii(), o);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_GT(rep.count(CheckStatus::Fail), 0u);
}

TEST(Suite, EmptyFixtureListIsAnError) {
  EXPECT_EQ(code_of([] { theorem_suite({}, default_radii()); }), ErrorCode::ParamDomain);
}

TEST(Suite, DeterministicText) {
  SuiteOptions o;
  o.nt = 16;
  o.ntheta = 32;
  const std::vector<Fixture> fx = default_fixtures();
  EXPECT_EQ(theorem_suite(fx, default_radii(), o).text(), theorem_suite(fx, default_radii(), o).text());
}

TEST(CheckLineFormat, Layout) {
  const CheckLine l{CheckStatus::Pass, "W.KH", "helix@r=0.1", {{"max_norm_phi", 1.5e-12}}, "note"};
  EXPECT_EQ(l.format(), "PASS W.KH fixture=helix@r=0.1 max_norm_phi=1.500000e-12 # note");
  EXPECT_STREQ(check_status_name(CheckStatus::Finding), "FINDING");
}

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

#include "ltube/error.hpp"
#include "ltube/surface.hpp"

using namespace ltube;

namespace {

constexpr double kR = 2.0;

// Round sphere of radius kR in latitude/longitude, Euclidean ambient metric.
SurfacePatch sphere() {
  auto eval = [](double u, double v) {
    const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
    SurfaceJet j;
    j.position = kR * MinkVector{cu * cv, cu * sv, su};
    j.xu = kR * MinkVector{-su * cv, -su * sv, cu};
    j.xv = kR * MinkVector{-cu * sv, cu * cv, 0};
    j.xuu = kR * MinkVector{-cu * cv, -cu * sv, -su};
    j.xuv = kR * MinkVector{su * sv, -su * cv, 0};
    j.xvv = kR * MinkVector{-cu * cv, -cu * sv, 0};
    return j;
  };
  return SurfacePatch(eval, {-1.2, 1.2, 0.0, 2 * M_PI, true}, JetSource::Analytic, Metric::Euclidean);
}

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

TEST(Metric, InnerProducts) {
  const MinkVector a{1, 2, 3}, b{4, 5, 6};
  EXPECT_EQ(metric_inner(Metric::Euclidean, a, b), 32.0);
  EXPECT_EQ(metric_inner(Metric::Minkowski, a, b), mink_inner(a, b));
  EXPECT_EQ(metric_cross(Metric::Euclidean, a, b), euclid_cross(a, b));
  EXPECT_EQ(metric_cross(Metric::Minkowski, a, b), lorentz_cross(a, b));
}

TEST(SphereSanity, GaussAndMeanCurvature) {
  const SurfacePatch s = sphere();
  for (double u : {-0.8, 0.0, 0.5}) {
    for (double v : {0.1, 2.0, 4.0}) {
      const SurfacePoint p = surface_point(s, u, v);
      EXPECT_NEAR(p.eps_normal, 1.0, 1e-14);
      EXPECT_NEAR(gaussian_curvature(p.forms, p.eps_normal), 1.0 / (kR * kR), 1e-12);
      EXPECT_NEAR(std::abs(mean_curvature(p.forms, p.eps_normal)), 1.0 / kR, 1e-12);
    }
  }
}

TEST(SphereSanity, SecondGaussianCurvatureEqualsMeanCurvature) {
  // on a round sphere II = +-I / R, so K_II = H = +-1/R (not K)
  const SurfacePatch s = sphere();
  for (double u : {-0.6, 0.0, 0.7}) {
    for (double v : {0.0, 1.0, 3.0, 6.0}) {
      const SurfacePoint p = surface_point(s, u, v);
      const double H = mean_curvature(p.forms, p.eps_normal);
      EXPECT_NEAR(second_gaussian_curvature(s, u, v), H, 1e-8 * std::abs(H));
    }
  }
}

TEST(Brioschi, IntrinsicCurvatureOfSphereMetric) {
  // E = R^2, F = 0, G = R^2 cos^2 u
  for (double u : {-1.0, 0.2, 0.9}) {
    FormJet j;
    j.P = kR * kR;
    j.R = kR * kR * std::cos(u) * std::cos(u);
    j.R_u = -kR * kR * std::sin(2 * u);
    j.R_uu = -2 * kR * kR * std::cos(2 * u);
    EXPECT_NEAR(brioschi(j), 1.0 / (kR * kR), 1e-14);
  }
}

TEST(Brioschi, FlatMetricHasZeroCurvature) {
  FormJet j;
  j.P = 1;
  j.R = 1;
  EXPECT_EQ(brioschi(j), 0.0);
}

TEST(Brioschi, DifferenceOrderAndRichardson) {
  const SurfacePatch s = sphere();
  const double u = 0.3, v = 1.1;
  const SurfacePoint p = surface_point(s, u, v);
  const double H = mean_curvature(p.forms, p.eps_normal);
  auto err = [&](double h, bool rich) {
    BrioschiOptions o;
    o.h_u = o.h_v = h;
    o.richardson = rich;
    return std::abs(second_gaussian_curvature(s, u, v, o) - H);
  };
  const double e1 = err(4e-2, false), e2 = err(2e-2, false);
  EXPECT_GT(e1 / e2, 3.5);  // second order
  EXPECT_LT(e1 / e2, 4.5);
  EXPECT_LT(err(4e-2, true), 0.05 * e1);
}

TEST(FromPosition, MatchesAnalyticJets) {
  const SurfacePatch s = sphere();
  const SurfacePatch d = SurfacePatch::from_position([&](double u, double v) { return s.jet(u, v).position; },
                                                     s.domain(), 1e-4, Metric::Euclidean);
  EXPECT_EQ(d.source(), JetSource::SampledFiniteDifference);
  const FundamentalForms a = fundamental_forms(s, 0.4, 2.0);
  const FundamentalForms b = fundamental_forms(d, 0.4, 2.0);
  EXPECT_NEAR(a.E, b.E, 1e-6);
  EXPECT_NEAR(a.G, b.G, 1e-6);
  EXPECT_NEAR(a.e, b.e, 1e-6);
  EXPECT_NEAR(a.g, b.g, 1e-6);
  EXPECT_NEAR(a.f, b.f, 1e-6);
}

TEST(MinkowskiPatch, TimelikePlaneIsFlat) {
  const SurfacePatch plane = SurfacePatch::from_position([](double u, double v) { return MinkVector{u, 0, v}; },
                                                         {-1, 1, -1, 1, false});
  const SurfacePoint p = surface_point(plane, 0.1, 0.2);
  EXPECT_LT(p.forms.first_det(), 0.0);
  EXPECT_NEAR(gaussian_curvature(p.forms, p.eps_normal), 0.0, 1e-12);
  EXPECT_NEAR(mean_curvature(p.forms, p.eps_normal), 0.0, 1e-12);
  EXPECT_NEAR(mink_inner(p.normal, p.normal), 1.0, 1e-14);
}

TEST(MinkowskiPatch, NullPlaneHasDegenerateTangentPlane) {
  const SurfacePatch plane = SurfacePatch::from_position([](double u, double v) { return MinkVector{u, u, v}; },
                                                         {-1, 1, -1, 1, false});
  EXPECT_EQ(code_of([&] { unit_normal(plane, 0.0, 0.0); }), ErrorCode::DegenerateTangentPlane);
}

TEST(Curvatures, DegenerateMetricThrows) {
  FundamentalForms f;
  EXPECT_EQ(code_of([&] { gaussian_curvature(f, 1.0); }), ErrorCode::DegenerateMetric);
  EXPECT_EQ(code_of([&] { mean_curvature(f, 1.0); }), ErrorCode::DegenerateMetric);
}

TEST(SecondGaussianCurvature, Preconditions) {
  const SurfacePatch plane = SurfacePatch::from_position([](double u, double v) { return MinkVector{u, v, 0}; },
                                                         {-1, 1, -1, 1, false}, 1e-4, Metric::Euclidean);
  EXPECT_EQ(code_of([&] { second_gaussian_curvature(plane, 0.0, 0.0); }), ErrorCode::DegenerateSecondForm);
  const SurfacePatch s = sphere();
  EXPECT_EQ(code_of([&] { second_gaussian_curvature(s, 1.2, 0.0); }), ErrorCode::StencilOutOfDomain);
  // periodic v wraps instead
  EXPECT_NO_THROW(second_gaussian_curvature(s, 0.0, 0.0));
}

TEST(SecondGaussianCurvature, DefaultSteps) {
  const auto [hu, hv] = brioschi_steps(sphere(), {});
  EXPECT_NEAR(hu, 2.4e-3, 1e-15);
  EXPECT_NEAR(hv, 2 * M_PI * 1e-3, 1e-15);
}

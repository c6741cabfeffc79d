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

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltube/minkowski.hpp"

namespace ltube {

/// Position and first three parameter derivatives at one parameter value.
struct CurveJet {
  MinkVector position;
  MinkVector d1;
  MinkVector d2;
  MinkVector d3;
};

enum class JetSource { Analytic, SampledFiniteDifference };

enum class CurvePreset { TimelikeLine, TimelikeHyperbola, TimelikeHelix, PolynomialTimelike };

/// Accepts "line", "hyperbola", "helix", "polynomial" and the enum spellings
/// ("TimelikeHelix", ...). Throws ParamDomain for anything else.
CurvePreset parse_curve_preset(std::string_view name);
bool is_curve_preset_name(std::string_view name);

inline constexpr double kUnitSpeedTol = 1e-7;
inline constexpr int kUnitSpeedGrid = 64;
inline constexpr double kKappaFloor = 1e-8;

/// An immutable timelike curve: a jet evaluator over [t_min, t_max].
///
/// Construction checks that the velocity is timelike on a 64-point grid
/// (NotTimelike otherwise) and records whether the curve is unit speed to
/// within kUnitSpeedTol on the same grid. Evaluation is permitted a small
/// distance outside the nominal domain so that centered stencils at the
/// boundary stay well defined.
class TimelikeCurve {
 public:
  using Evaluator = std::function<CurveJet(double)>;

  TimelikeCurve(Evaluator eval, double t_min, double t_max, JetSource source, std::string label,
                double margin = -1.0);

  CurveJet jet(double t) const;

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  double span() const { return t_max_ - t_min_; }
  double margin() const { return margin_; }
  JetSource source() const { return source_; }
  const std::string& label() const { return label_; }
  bool unit_speed() const { return unit_speed_; }
  /// max |<d1,d1> + 1| over the validation grid.
  double unit_speed_deviation() const { return unit_speed_deviation_; }

 private:
  Evaluator eval_;
  double t_min_;
  double t_max_;
  double margin_;
  JetSource source_;
  std::string label_;
  bool unit_speed_ = false;
  double unit_speed_deviation_ = 0.0;
};

/// Test-fixture factory.
///   TimelikeLine        params: [t_min, t_max]               gamma(s) = (s, 0, 0)
///   TimelikeHyperbola   params: [t_min, t_max]               gamma(s) = (sinh s, cosh s, 0)
///   TimelikeHelix       params: a, b, w [, t_min, t_max]     gamma(s) = (a s, b cos ws, b sin ws)
///   PolynomialTimelike  params: [u_min, u_max]               gamma(u) = (2u, u^2, u^3/3)
/// Domain defaults are [-1, 1], [-1, 1], [0, 2pi], [-0.5, 0.5]. With
/// require_unit_speed the helix must satisfy a^2 - b^2 w^2 = 1.
/// Helix params default to a = sqrt 2, b = w = 1.
TimelikeCurve make_analytic_curve(CurvePreset preset, std::span<const double> params,
                                  bool require_unit_speed = true);

/// Arclength reparametrization s(t) = t_min + int_{t_min}^t |gamma'|, inverted
/// by safeguarded Newton iteration. Jets of the result come from the chain rule
/// through the inverted map, so only derivatives up to order three of the input
/// are needed. The new domain starts at the old t_min, which makes the map the
/// identity on curves that are already unit speed.
TimelikeCurve reparametrize_unit_speed(const TimelikeCurve& curve, int quad_steps = 256);

/// Samples of a curve: strictly increasing parameter values with positions.
struct CurveSamples {
  std::vector<double> s;
  std::vector<MinkVector> points;
};

/// Reads the `s,y1,y2,y3` CSV format. Throws Parse with the 1-based line
/// number on malformed input, Io when the file cannot be opened.
CurveSamples read_curve_csv(const std::string& path);
CurveSamples parse_curve_csv(std::string_view text);

/// Curve whose jets are derivatives of the local 7-point interpolant
/// (Fornberg weights on the nearest samples).
TimelikeCurve make_sampled_curve(CurveSamples samples, std::string label = "sampled");

/// Frenet apparatus of a unit-speed timelike curve:
///   t' = kappa n,  n' = kappa t + tau b,  b' = -tau n
/// with <t,t> = -1 and <n,n> = <b,b> = 1.
struct FrenetData {
  MinkVector t;
  MinkVector n;
  MinkVector b;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Frenet data plus the parameter derivatives of the frame fields and of
/// kappa, all from the order-3 jet.
struct FrenetJet {
  FrenetData frame;
  double dkappa = 0.0;
  MinkVector dt;
  MinkVector dn;
  MinkVector db;
};

/// b = lorentz_cross(t, n), tau = <d3, b> / kappa. Throws VanishingCurvature
/// when kappa <= kappa_floor and ParamDomain when the curve is not unit speed.
FrenetData frenet_frame(const TimelikeCurve& curve, double s, double kappa_floor = kKappaFloor);
FrenetJet frenet_jet(const TimelikeCurve& curve, double s, double kappa_floor = kKappaFloor);

struct CurvatureSample {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double dkappa = 0.0;
};

/// kappa' = <d2, d3> / kappa, which is exact for the jet (kappa^2 = <d2,d2>).
std::vector<CurvatureSample> curvature_profile(const TimelikeCurve& curve,
                                               std::span<const double> grid,
                                               double kappa_floor = kKappaFloor);

/// n evenly spaced parameters covering [t_min, t_max] including both ends.
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace ltube

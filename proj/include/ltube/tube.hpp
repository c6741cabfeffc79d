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

#include <optional>
#include <vector>

#include "ltube/curve.hpp"
#include "ltube/surface.hpp"

namespace ltube {

/// Constant normal frame supplied by the caller for a straight timelike line,
/// where the Frenet frame does not exist.
struct NormalFrame {
  MinkVector n;
  MinkVector b;
};

/// Tube of radius r about a unit-speed timelike curve,
///   x(t, theta) = gamma(t) + r (cos theta n + sin theta b).
class TubeSurface {
 public:
  const TimelikeCurve& curve() const { return curve_; }
  double radius() const { return radius_; }
  /// Largest kappa seen on the construction grid (0 for explicit-frame lines).
  double kappa_sup() const { return kappa_sup_; }
  bool has_explicit_frame() const { return frame_.has_value(); }

  /// Frenet jet, or the constant caller frame with kappa = tau = 0.
  FrenetJet frame_at(double t) const;
  MinkVector position(double t, double theta) const;

  /// t over the curve domain, theta over [0, 2pi) periodic.
  PatchDomain domain() const;
  /// Jets from the curve's order-3 jet: x_t, x_theta, x_t theta, x_theta theta
  /// in closed form from the frame fields and their derivatives, x_tt by a
  /// 5-point central difference of x_t.
  SurfacePatch patch() const;
  /// Jets by central differences of the position map alone.
  SurfacePatch difference_patch(double h = 1e-4) const;

 private:
  friend TubeSurface make_tube(const TimelikeCurve&, double);
  friend TubeSurface make_cylinder(const TimelikeCurve&, double, const NormalFrame&);
  TubeSurface(TimelikeCurve curve, double r, double kappa_sup, std::optional<NormalFrame> frame)
      : curve_(std::move(curve)), radius_(r), kappa_sup_(kappa_sup), frame_(frame) {}

  TimelikeCurve curve_;
  double radius_;
  double kappa_sup_;
  std::optional<NormalFrame> frame_;
};

inline constexpr int kRadiusCheckGrid = 1024;

/// Requires a unit-speed curve and r * sup kappa < 1 (so alpha > 0
/// everywhere). Throws RadiusTooLarge with sup kappa and 1/sup kappa in the
/// message, or VanishingCurvature from the frame.
TubeSurface make_tube(const TimelikeCurve& curve, double r);

/// Tube about a straight line with a constant, <,>-orthonormal normal frame
/// (<n,n> = <b,b> = 1, <n,b> = <n,t> = <b,t> = 0). Throws ParamDomain when
/// the curve is not straight or the frame is not orthonormal.
TubeSurface make_cylinder(const TimelikeCurve& line, double r, const NormalFrame& frame);

struct CurvaturePartials {
  double K_t = 0, K_theta = 0;
  double H_t = 0, H_theta = 0;
  double KII_t = 0, KII_theta = 0;  // NaN where the second form is degenerate
};

/// Closed-form H: magnitude and the sign carried by -(1 + 2 r k cos)/(2 r alpha).
struct ClosedFormH {
  double magnitude = 0.0;
  double printed_sign = -1.0;
  double value() const { return printed_sign * magnitude; }
};

enum class PartialsForm {
  Printed,    // transcribed verbatim, including the t-derivative of K_II
  Corrected,  // t-derivative of K_II with kappa' on the 4 r cos^2 term
};

struct TubePointData {
  double t = 0.0;
  double theta = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double dkappa = 0.0;
  double alpha = 0.0;
  MinkVector position;
  MinkVector x_t;
  MinkVector x_theta;
  FundamentalForms forms;
  double K = 0.0;
  ClosedFormH H;
  bool kii_valid = false;
  double K_II = 0.0;  // NaN when !kii_valid
  CurvaturePartials partials;
};

/// Frame scalars at one t. Closed forms for any theta follow without touching
/// the curve again, which is what grid sweeps want.
struct TubeSection {
  double t = 0.0;
  double r = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double dkappa = 0.0;

  /// 1 + r kappa cos theta; throws SingularAlpha when it vanishes.
  double alpha(double theta) const;
  double K(double theta) const;
  ClosedFormH H(double theta) const;
  bool second_form_regular(double theta) const;
  double KII(double theta) const;
  CurvaturePartials partials(double theta, PartialsForm form = PartialsForm::Corrected) const;
  FundamentalForms forms(double theta) const;
};

TubeSection tube_section(const TubeSurface& tube, double t);

double tube_alpha(const TubeSurface& tube, double t, double theta);
double closed_form_K(const TubeSurface& tube, double t, double theta);
ClosedFormH closed_form_H(const TubeSurface& tube, double t, double theta);
/// Throws DegenerateSecondForm where kappa alpha cos theta = 0.
double closed_form_KII(const TubeSurface& tube, double t, double theta);
CurvaturePartials curvature_partials(const TubeSurface& tube, double t, double theta,
                                     PartialsForm form = PartialsForm::Corrected);
/// E = -alpha^2 + r^2 tau^2, F = r^2 tau, G = r^2, e = r tau^2 - kappa alpha cos, f = r tau, g = r.
FundamentalForms closed_form_forms(const TubeSurface& tube, double t, double theta);

/// Closed forms at one point; t must lie in the curve domain.
TubePointData evaluate(const TubeSurface& tube, double t, double theta,
                       PartialsForm form = PartialsForm::Corrected);

/// Sampling grid: t uniform over the domain including both ends; theta at
/// half-step offsets (j + 1/2) 2pi / n so cos theta never vanishes exactly.
struct TubeGrid {
  std::vector<double> t;
  std::vector<double> theta;
  std::size_t size() const { return t.size() * theta.size(); }
};

TubeGrid make_tube_grid(const TubeSurface& tube, int nt, int ntheta);

inline constexpr double kKIIMaskRatio = 0.05;

/// Row-major (t outer) validity of K_II: |eg - f^2| >= ratio * max over the
/// grid of |eg - f^2|. All false on tubes about lines.
std::vector<bool> kii_mask(const TubeSurface& tube, const TubeGrid& grid, double ratio = kKIIMaskRatio);

}  // namespace ltube

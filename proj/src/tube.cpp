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

#include "ltube/tube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ltube/error.hpp"

namespace ltube {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string where(double t, double theta) { return "(" + num(t) + ", " + num(theta) + ")"; }

void check_radius(double r) {
  if (!(r > 0.0 && std::isfinite(r))) throw Error(ErrorCode::ParamDomain, "tube radius must be > 0, got " + num(r));
}

}  // namespace

FrenetJet TubeSurface::frame_at(double t) const {
  if (!frame_) return frenet_jet(curve_, t);
  FrenetJet fj;
  fj.frame.t = curve_.jet(t).d1;
  fj.frame.n = frame_->n;
  fj.frame.b = frame_->b;
  return fj;
}

MinkVector TubeSurface::position(double t, double theta) const {
  const FrenetJet fj = frame_at(t);
  return curve_.jet(t).position + radius_ * (std::cos(theta) * fj.frame.n + std::sin(theta) * fj.frame.b);
}

PatchDomain TubeSurface::domain() const { return {curve_.t_min(), curve_.t_max(), 0.0, kTwoPi, true}; }

SurfacePatch TubeSurface::patch() const {
  const TubeSurface self = *this;
  const double h = std::min(2e-3, 1e-3 * curve_.span());
  auto x_t = [self](double t, double c, double s) {
    const FrenetJet fj = self.frame_at(t);
    return self.curve_.jet(t).d1 + self.radius_ * (c * fj.dn + s * fj.db);
  };
  auto eval = [self, h, x_t](double t, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double r = self.radius_;
    const FrenetJet fj = self.frame_at(t);
    const CurveJet cj = self.curve_.jet(t);
    SurfaceJet j;
    j.position = cj.position + r * (c * fj.frame.n + s * fj.frame.b);
    j.xu = cj.d1 + r * (c * fj.dn + s * fj.db);
    j.xv = r * (-s * fj.frame.n + c * fj.frame.b);
    j.xvv = -r * (c * fj.frame.n + s * fj.frame.b);
    j.xuv = r * (-s * fj.dn + c * fj.db);
    j.xuu = (x_t(t - 2 * h, c, s) - 8.0 * x_t(t - h, c, s) + 8.0 * x_t(t + h, c, s) - x_t(t + 2 * h, c, s)) /
            (12 * h);
    return j;
  };
  return SurfacePatch(std::move(eval), domain(), curve_.source());
}

SurfacePatch TubeSurface::difference_patch(double h) const {
  const TubeSurface self = *this;
  return SurfacePatch::from_position([self](double t, double theta) { return self.position(t, theta); },
                                     domain(), h);
}

TubeSurface make_tube(const TimelikeCurve& curve, double r) {
  check_radius(r);
  if (!curve.unit_speed()) {
    throw Error(ErrorCode::ParamDomain, "tube needs a unit-speed curve; reparametrize '" + curve.label() + "'");
  }
  double sup = 0.0;
  for (double t : uniform_grid(curve.t_min(), curve.t_max(), kRadiusCheckGrid + 1)) {
    sup = std::max(sup, frenet_frame(curve, t).kappa);
  }
  if (!(r * sup < 1.0)) {
    throw Error(ErrorCode::RadiusTooLarge, "radius " + num(r) + " is not admissible: sup kappa = " + num(sup) +
                                               ", radius must be < " + num(1.0 / sup));
  }
  return TubeSurface(curve, r, sup, std::nullopt);
}

TubeSurface make_cylinder(const TimelikeCurve& line, double r, const NormalFrame& frame) {
  check_radius(r);
  if (!line.unit_speed()) {
    throw Error(ErrorCode::ParamDomain, "cylinder needs a unit-speed line; reparametrize '" + line.label() + "'");
  }
  const double tol = 1e-9;
  if (std::abs(mink_inner(frame.n, frame.n) - 1) > tol || std::abs(mink_inner(frame.b, frame.b) - 1) > tol ||
      std::abs(mink_inner(frame.n, frame.b)) > tol) {
    throw Error(ErrorCode::ParamDomain, "explicit frame must satisfy <n,n> = <b,b> = 1 and <n,b> = 0");
  }
  for (double t : uniform_grid(line.t_min(), line.t_max(), kUnitSpeedGrid)) {
    const CurveJet j = line.jet(t);
    if (mink_norm(j.d2) > kKappaFloor) {
      throw Error(ErrorCode::ParamDomain, "explicit frame requires a straight line; curvature " +
                                              num(mink_norm(j.d2)) + " at t = " + num(t));
    }
    if (std::abs(mink_inner(j.d1, frame.n)) > tol || std::abs(mink_inner(j.d1, frame.b)) > tol) {
      throw Error(ErrorCode::ParamDomain, "explicit frame is not normal to the line at t = " + num(t));
    }
  }
  return TubeSurface(line, r, 0.0, frame);
}

TubeSection tube_section(const TubeSurface& tube, double t) {
  const FrenetJet fj = tube.frame_at(t);
  return {t, tube.radius(), fj.frame.kappa, fj.frame.tau, fj.dkappa};
}

double TubeSection::alpha(double theta) const {
  const double a = 1.0 + r * kappa * std::cos(theta);
  if (!(std::abs(a) > 1e-12)) {
    throw Error(ErrorCode::SingularAlpha, "alpha = 1 + r kappa cos theta vanishes at " + where(t, theta));
  }
  return a;
}

double TubeSection::K(double theta) const { return kappa * std::cos(theta) / (r * alpha(theta)); }

ClosedFormH TubeSection::H(double theta) const {
  const double value = -(1 + 2 * r * kappa * std::cos(theta)) / (2 * r * alpha(theta));
  return {std::abs(value), value < 0.0 ? -1.0 : 1.0};
}

bool TubeSection::second_form_regular(double theta) const {
  return kappa > kKappaFloor && std::abs(std::cos(theta)) > 1e-12;
}

double TubeSection::KII(double theta) const {
  const double a = alpha(theta);
  if (!second_form_regular(theta)) {
    throw Error(ErrorCode::DegenerateSecondForm,
                "kappa alpha cos theta vanishes at " + where(t, theta) + "; K_II undefined");
  }
  const double c = std::cos(theta);
  const double c2 = c * c;
  return (4 * r * r * kappa * kappa * c2 * c2 + 6 * r * kappa * c2 * c + c2 + 1) / (4 * r * a * a * c2);
}

CurvaturePartials TubeSection::partials(double theta, PartialsForm form) const {
  const double k = kappa, kp = dkappa, c = std::cos(theta), s = std::sin(theta);
  const double a2 = alpha(theta) * alpha(theta);
  const double a4 = a2 * a2;
  CurvaturePartials p;
  p.K_t = kp * c / (r * a2);
  p.K_theta = -k * s / (r * a2);
  p.H_t = -kp * c / (2 * a2);
  p.H_theta = k * s / (2 * a2);
  if (!second_form_regular(theta)) {
    p.KII_t = kNaN;
    p.KII_theta = kNaN;
    return p;
  }
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c5 = c4 * c, c6 = c3 * c3;
  const double cos2_term = form == PartialsForm::Printed ? 4 * r * c2 : 4 * r * kp * c2;
  p.KII_t = (2 * r * r * r * k * k * kp * c4 + 6 * r * r * k * kp * c3 + cos2_term - 2 * r * r * k * kp * c -
             2 * r * kp) /
            (4 * r * a4 * c);
  p.KII_theta = (-2 * r * r * r * k * k * k * c6 * s - 6 * r * r * k * k * c5 * s - 4 * r * k * c4 * s +
                 4 * r * r * k * k * c3 * s + 6 * r * k * c2 * s + 2 * c * s) /
                (4 * r * a4 * c4);
  return p;
}

FundamentalForms TubeSection::forms(double theta) const {
  const double a = alpha(theta);
  FundamentalForms f;
  f.E = -a * a + r * r * tau * tau;
  f.F = r * r * tau;
  f.G = r * r;
  f.e = r * tau * tau - kappa * a * std::cos(theta);
  f.f = r * tau;
  f.g = r;
  return f;
}

double tube_alpha(const TubeSurface& tube, double t, double theta) { return tube_section(tube, t).alpha(theta); }

double closed_form_K(const TubeSurface& tube, double t, double theta) { return tube_section(tube, t).K(theta); }

ClosedFormH closed_form_H(const TubeSurface& tube, double t, double theta) {
  return tube_section(tube, t).H(theta);
}

double closed_form_KII(const TubeSurface& tube, double t, double theta) {
  return tube_section(tube, t).KII(theta);
}

CurvaturePartials curvature_partials(const TubeSurface& tube, double t, double theta, PartialsForm form) {
  return tube_section(tube, t).partials(theta, form);
}

FundamentalForms closed_form_forms(const TubeSurface& tube, double t, double theta) {
  return tube_section(tube, t).forms(theta);
}

TubePointData evaluate(const TubeSurface& tube, double t, double theta, PartialsForm form) {
  const TimelikeCurve& c = tube.curve();
  if (!(t >= c.t_min() && t <= c.t_max()) || !std::isfinite(theta)) {
    throw Error(ErrorCode::DomainViolation, "point " + where(t, theta) + " outside tube domain");
  }
  const FrenetJet fj = tube.frame_at(t);
  const TubeSection sec{t, tube.radius(), fj.frame.kappa, fj.frame.tau, fj.dkappa};
  const double r = tube.radius();
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  TubePointData d;
  d.t = t;
  d.theta = theta;
  d.kappa = sec.kappa;
  d.tau = sec.tau;
  d.dkappa = sec.dkappa;
  d.alpha = sec.alpha(theta);
  const MinkVector v = cs * fj.frame.b - sn * fj.frame.n;
  d.position = c.jet(t).position + r * (cs * fj.frame.n + sn * fj.frame.b);
  d.x_t = d.alpha * fj.frame.t + (r * sec.tau) * v;
  d.x_theta = r * v;
  d.forms = sec.forms(theta);
  d.K = sec.K(theta);
  d.H = sec.H(theta);
  d.kii_valid = sec.second_form_regular(theta);
  d.K_II = d.kii_valid ? sec.KII(theta) : kNaN;
  d.partials = sec.partials(theta, form);
  return d;
}

TubeGrid make_tube_grid(const TubeSurface& tube, int nt, int ntheta) {
  if (nt < 2 || ntheta < 2) throw Error(ErrorCode::ParamDomain, "grid needs at least 2 points per axis");
  TubeGrid g;
  g.t = uniform_grid(tube.curve().t_min(), tube.curve().t_max(), nt);
  g.theta.resize(static_cast<std::size_t>(ntheta));
  for (int j = 0; j < ntheta; ++j) g.theta[static_cast<std::size_t>(j)] = (j + 0.5) * kTwoPi / ntheta;
  return g;
}

std::vector<bool> kii_mask(const TubeSurface& tube, const TubeGrid& grid, double ratio) {
  std::vector<double> det;
  det.reserve(grid.size());
  double peak = 0.0;
  for (double t : grid.t) {
    const TubeSection sec = tube_section(tube, t);
    for (double th : grid.theta) {
      const double d = sec.second_form_regular(th) ? std::abs(sec.r * sec.kappa * sec.alpha(th) * std::cos(th)) : 0.0;
      det.push_back(d);
      peak = std::max(peak, d);
    }
  }
  std::vector<bool> mask(det.size());
  for (std::size_t i = 0; i < det.size(); ++i) mask[i] = peak > 0.0 && det[i] > 0.0 && det[i] >= ratio * peak;
  return mask;
}

}  // namespace ltube

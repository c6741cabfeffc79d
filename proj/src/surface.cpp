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

#include "ltube/surface.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "ltube/error.hpp"

namespace ltube {

double metric_inner(Metric m, const MinkVector& a, const MinkVector& b) {
  return m == Metric::Minkowski ? mink_inner(a, b) : euclid_dot(a, b);
}

MinkVector metric_cross(Metric m, const MinkVector& a, const MinkVector& b) {
  return m == Metric::Minkowski ? lorentz_cross(a, b) : euclid_cross(a, b);
}

SurfacePatch::SurfacePatch(Evaluator eval, PatchDomain domain, JetSource source, Metric metric)
    : eval_(std::move(eval)), domain_(domain), source_(source), metric_(metric) {}

SurfacePatch SurfacePatch::from_position(PositionFn position, PatchDomain domain, double h, Metric metric) {
  auto eval = [position = std::move(position), h](double u, double v) {
    const MinkVector c = position(u, v);
    const MinkVector up = position(u + h, v);
    const MinkVector um = position(u - h, v);
    const MinkVector vp = position(u, v + h);
    const MinkVector vm = position(u, v - h);
    const MinkVector pp = position(u + h, v + h);
    const MinkVector pm = position(u + h, v - h);
    const MinkVector mp = position(u - h, v + h);
    const MinkVector mm = position(u - h, v - h);
    SurfaceJet j;
    j.position = c;
    j.xu = (up - um) / (2 * h);
    j.xv = (vp - vm) / (2 * h);
    j.xuu = (up - 2.0 * c + um) / (h * h);
    j.xvv = (vp - 2.0 * c + vm) / (h * h);
    j.xuv = (pp - pm - mp + mm) / (4 * h * h);
    return j;
  };
  return SurfacePatch(std::move(eval), domain, JetSource::SampledFiniteDifference, metric);
}

namespace {

std::string at(double u, double v) {
  std::ostringstream os;
  os.precision(17);
  os << " at (" << u << ", " << v << ")";
  return os.str();
}

MinkVector normal_from_jet(Metric m, const SurfaceJet& j, double u, double v) {
  const MinkVector n = metric_cross(m, j.xu, j.xv);
  const double len = metric_norm(m, n);
  if (!(len > 1e-10)) {
    throw Error(ErrorCode::DegenerateTangentPlane, "tangent plane is degenerate" + at(u, v));
  }
  return n / len;
}

}  // namespace

SurfacePoint surface_point(const SurfacePatch& patch, double u, double v) {
  const Metric m = patch.metric();
  SurfacePoint p;
  p.jet = patch.jet(u, v);
  p.normal = normal_from_jet(m, p.jet, u, v);
  p.eps_normal = metric_inner(m, p.normal, p.normal) < 0.0 ? -1.0 : 1.0;
  p.forms.E = metric_inner(m, p.jet.xu, p.jet.xu);
  p.forms.F = metric_inner(m, p.jet.xu, p.jet.xv);
  p.forms.G = metric_inner(m, p.jet.xv, p.jet.xv);
  p.forms.e = metric_inner(m, p.jet.xuu, p.normal);
  p.forms.f = metric_inner(m, p.jet.xuv, p.normal);
  p.forms.g = metric_inner(m, p.jet.xvv, p.normal);
  return p;
}

MinkVector unit_normal(const SurfacePatch& patch, double u, double v) {
  return normal_from_jet(patch.metric(), patch.jet(u, v), u, v);
}

FundamentalForms fundamental_forms(const SurfacePatch& patch, double u, double v) {
  return surface_point(patch, u, v).forms;
}

double gaussian_curvature(const FundamentalForms& forms, double eps_normal) {
  const double det = forms.first_det();
  if (!(std::abs(det) > 1e-14)) throw Error(ErrorCode::DegenerateMetric, "EG - F^2 vanishes");
  return eps_normal * forms.second_det() / det;
}

double mean_curvature(const FundamentalForms& forms, double eps_normal) {
  const double det = forms.first_det();
  if (!(std::abs(det) > 1e-14)) throw Error(ErrorCode::DegenerateMetric, "EG - F^2 vanishes");
  return eps_normal * (forms.e * forms.G - 2.0 * forms.f * forms.F + forms.g * forms.E) / (2.0 * det);
}

namespace {

double det3(const std::array<std::array<double, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

double brioschi(const FormJet& w) {
  const std::array<std::array<double, 3>, 3> a = {{
      {-0.5 * w.P_vv + w.Q_uv - 0.5 * w.R_uu, 0.5 * w.P_u, w.Q_u - 0.5 * w.P_v},
      {w.Q_v - 0.5 * w.R_u, w.P, w.Q},
      {0.5 * w.R_v, w.Q, w.R},
  }};
  const std::array<std::array<double, 3>, 3> b = {{
      {0.0, 0.5 * w.P_v, 0.5 * w.R_u},
      {0.5 * w.P_v, w.P, w.Q},
      {0.5 * w.R_u, w.Q, w.R},
  }};
  const double d = w.P * w.R - w.Q * w.Q;
  return (det3(a) - det3(b)) / (d * d);
}

std::pair<double, double> brioschi_steps(const SurfacePatch& patch, const BrioschiOptions& options) {
  const PatchDomain& d = patch.domain();
  const double hu = options.h_u > 0.0 ? options.h_u : 1e-3 * (d.u_max - d.u_min);
  const double hv = options.h_v > 0.0 ? options.h_v : 1e-3 * (d.v_max - d.v_min);
  return {hu, hv};
}

namespace {

double second_gaussian_at_step(const SurfacePatch& patch, double u, double v, double hu, double hv,
                               double floor) {
  // stencil[i][j] holds (e, f, g) at (u + (i-1) hu, v + (j-1) hv)
  std::array<std::array<FundamentalForms, 3>, 3> s{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double uu = u + (i - 1) * hu;
      const double vv = v + (j - 1) * hv;
      s[i][j] = fundamental_forms(patch, uu, vv);
      if (!(std::abs(s[i][j].second_det()) > floor)) {
        throw Error(ErrorCode::DegenerateSecondForm, "second fundamental form is degenerate" + at(uu, vv));
      }
    }
  }
  auto field = [&](double FundamentalForms::*member, double& val, double& du, double& dv, double& duu,
                   double& duv, double& dvv) {
    auto x = [&](int i, int j) { return s[i][j].*member; };
    val = x(1, 1);
    du = (x(2, 1) - x(0, 1)) / (2 * hu);
    dv = (x(1, 2) - x(1, 0)) / (2 * hv);
    duu = (x(2, 1) - 2 * x(1, 1) + x(0, 1)) / (hu * hu);
    dvv = (x(1, 2) - 2 * x(1, 1) + x(1, 0)) / (hv * hv);
    duv = (x(2, 2) - x(2, 0) - x(0, 2) + x(0, 0)) / (4 * hu * hv);
  };
  FormJet w;
  field(&FundamentalForms::e, w.P, w.P_u, w.P_v, w.P_uu, w.P_uv, w.P_vv);
  field(&FundamentalForms::f, w.Q, w.Q_u, w.Q_v, w.Q_uu, w.Q_uv, w.Q_vv);
  field(&FundamentalForms::g, w.R, w.R_u, w.R_v, w.R_uu, w.R_uv, w.R_vv);
  return brioschi(w);
}

}  // namespace

double second_gaussian_curvature(const SurfacePatch& patch, double u, double v, const BrioschiOptions& options) {
  const auto [hu, hv] = brioschi_steps(patch, options);
  const PatchDomain& d = patch.domain();
  if (u - hu < d.u_min || u + hu > d.u_max || (!d.v_periodic && (v - hv < d.v_min || v + hv > d.v_max))) {
    throw Error(ErrorCode::StencilOutOfDomain, "Brioschi stencil leaves the patch domain" + at(u, v));
  }
  const double coarse = second_gaussian_at_step(patch, u, v, hu, hv, options.degeneracy_floor);
  if (!options.richardson) return coarse;
  const double fine = second_gaussian_at_step(patch, u, v, 0.5 * hu, 0.5 * hv, options.degeneracy_floor);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace ltube

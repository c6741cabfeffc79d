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

#include "ltube/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltube/error.hpp"

namespace ltube {

namespace {

double rel(double got, double ref) {
  const double d = std::abs(got - ref);
  return ref != 0.0 ? d / std::abs(ref) : d;
}

// error relative to a local scale; absolute where the scale is zero
double grad_rel(double err, double scale) { return scale > 0.0 ? err / scale : err; }

double five_point(double fm2, double fm1, double fp1, double fp2, double h) {
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

struct Max {
  double value = 0.0;
  void add(double v) {
    if (std::isnan(v)) {
      value = std::numeric_limits<double>::infinity();
    } else {
      value = std::max(value, v);
    }
  }
};

CheckLine check(const std::string& id, const std::string& name, double err, double tol,
                const std::string& note = {}) {
  return {err <= tol ? CheckStatus::Pass : CheckStatus::Fail, id, name, {{"max_rel", err}, {"tol", tol}}, note};
}

enum Field { kK, kH, kKII };

double field_value(const TubeSection& s, Field f, double th) {
  switch (f) {
    case kK: return s.K(th);
    case kH: return s.H(th).value();
    case kKII: return s.KII(th);
  }
  return 0.0;
}

}  // namespace

VerificationReport verify_tube(const TubeSurface& tube, const std::string& name, const VerifyOptions& opt) {
  const TubeGrid grid = make_tube_grid(tube, opt.nt, opt.ntheta);
  const SurfacePatch patch = tube.patch();
  const SurfacePatch diff = tube.difference_patch(opt.fd_jet_step);
  const std::vector<bool> mask = kii_mask(tube, grid, opt.kii_mask_ratio);
  const auto [hu, hv] = brioschi_steps(patch, opt.brioschi);
  const double r = tube.radius();
  const bool has_kii = !tube.has_explicit_frame();
  const double valid_fraction =
      static_cast<double>(std::count(mask.begin(), mask.end(), true)) / static_cast<double>(mask.size());
  const bool kii_checked = has_kii && valid_fraction >= 0.5;

  Max eE, eF, eG, ee, ef, eg, first_det, second_det, normal, normal_sq, xt, xtheta, eK, eH, eKII, jetK, jetH;
  Max pKt, pKth, pHt, pHth, pKIIt, pKIIt_printed, pKIIth;
  double sign_min = std::numeric_limits<double>::infinity();
  double sign_max = -std::numeric_limits<double>::infinity();
  std::size_t kii_points = 0;

  const double ht = std::min(2e-3, 1e-3 * tube.curve().span());
  const double hth = 1e-3;
  std::size_t idx = 0;
  for (double t : grid.t) {
    const FrenetJet fj = tube.frame_at(t);
    const TubeSection sec = tube_section(tube, t);
    const std::array<TubeSection, 4> near = {tube_section(tube, t - 2 * ht), tube_section(tube, t - ht),
                                             tube_section(tube, t + ht), tube_section(tube, t + 2 * ht)};
    // K changes sign along the circle; jets are compared against the row's largest value
    double row_K = 0.0, row_H = 0.0;
    for (double th : grid.theta) {
      row_K = std::max(row_K, std::abs(sec.K(th)));
      row_H = std::max(row_H, sec.H(th).magnitude);
    }
    if (row_K == 0.0) row_K = 1.0;
    const bool interior = t - 2 * hu >= tube.curve().t_min() && t + 2 * hu <= tube.curve().t_max();
    for (double th : grid.theta) {
      const bool kii_ok = mask[idx++];
      const double c = std::cos(th);
      const double s = std::sin(th);
      const double alpha = sec.alpha(th);
      const SurfacePoint sp = surface_point(patch, t, th);
      const FundamentalForms& o = sp.forms;
      const FundamentalForms cf = sec.forms(th);

      const double first_scale = std::max({std::abs(cf.E), std::abs(cf.F), std::abs(cf.G)});
      const double second_scale = std::max({std::abs(cf.e), std::abs(cf.f), std::abs(cf.g)});
      eE.add(std::abs(o.E - cf.E) / first_scale);
      eF.add(std::abs(o.F - cf.F) / first_scale);
      eG.add(std::abs(o.G - cf.G) / first_scale);
      ee.add(std::abs(o.e - cf.e) / second_scale);
      ef.add(std::abs(o.f - cf.f) / second_scale);
      eg.add(std::abs(o.g - cf.g) / second_scale);
      first_det.add(rel(o.first_det(), -alpha * alpha * r * r));
      // eg - f^2 cancels near cos theta = 0; measure against its terms
      const double det_terms = std::abs(o.e * o.g) + o.f * o.f;
      second_det.add(grad_rel(std::abs(o.second_det() + r * sec.kappa * alpha * c), det_terms));

      const MinkVector u_closed = -c * fj.frame.n - s * fj.frame.b;
      const MinkVector du = sp.normal - u_closed;
      normal.add(std::max({std::abs(du.y1), std::abs(du.y2), std::abs(du.y3)}));
      normal_sq.add(std::abs(mink_inner(sp.normal, sp.normal) - 1.0));
      const MinkVector v = c * fj.frame.b - s * fj.frame.n;
      const MinkVector xt_closed = alpha * fj.frame.t + (r * sec.tau) * v;
      xt.add(euclid_norm(sp.jet.xu - xt_closed) / euclid_norm(xt_closed));
      xtheta.add(euclid_norm(sp.jet.xv - r * v) / euclid_norm(r * v));

      const double K_o = gaussian_curvature(o, sp.eps_normal);
      const double H_o = mean_curvature(o, sp.eps_normal);
      const double K_c = sec.K(th);
      const ClosedFormH H_c = sec.H(th);
      eK.add(rel(K_o, K_c));
      eH.add(rel(std::abs(H_o), H_c.magnitude));
      const double ratio = H_c.value() / H_o;
      sign_min = std::min(sign_min, ratio);
      sign_max = std::max(sign_max, ratio);

      const SurfacePoint dp = surface_point(diff, t, th);
      jetK.add(std::abs(gaussian_curvature(dp.forms, dp.eps_normal) - K_o) / row_K);
      jetH.add(std::abs(mean_curvature(dp.forms, dp.eps_normal) - H_o) / row_H);

      if (kii_checked && kii_ok && interior) {
        eKII.add(rel(second_gaussian_curvature(patch, t, th, opt.brioschi), sec.KII(th)));
        ++kii_points;
      }

      const CurvaturePartials pc = sec.partials(th, PartialsForm::Corrected);
      const CurvaturePartials pp = sec.partials(th, PartialsForm::Printed);
      auto fd_t = [&](Field f) {
        return five_point(field_value(near[0], f, th), field_value(near[1], f, th), field_value(near[2], f, th),
                          field_value(near[3], f, th), ht);
      };
      auto fd_th = [&](Field f) {
        return five_point(field_value(sec, f, th - 2 * hth), field_value(sec, f, th - hth),
                          field_value(sec, f, th + hth), field_value(sec, f, th + 2 * hth), hth);
      };
      {
        const double dt = fd_t(kK), dth = fd_th(kK);
        const double scale = std::max(std::abs(dt), std::abs(dth));
        pKt.add(grad_rel(std::abs(pc.K_t - dt), scale));
        pKth.add(grad_rel(std::abs(pc.K_theta - dth), scale));
      }
      {
        const double dt = fd_t(kH), dth = fd_th(kH);
        const double scale = std::max(std::abs(dt), std::abs(dth));
        pHt.add(grad_rel(std::abs(pc.H_t - dt), scale));
        pHth.add(grad_rel(std::abs(pc.H_theta - dth), scale));
      }
      if (kii_checked && kii_ok) {
        const double dt = fd_t(kKII), dth = fd_th(kKII);
        const double scale = std::max(std::abs(dt), std::abs(dth));
        pKIIt.add(grad_rel(std::abs(pc.KII_t - dt), scale));
        pKIIt_printed.add(grad_rel(std::abs(pp.KII_t - dt), scale));
        pKIIth.add(grad_rel(std::abs(pp.KII_theta - dth), scale));
      }
    }
  }

  const VerifyTolerances& tol = opt.tol;
  ReportSection forms{"forms", "fundamental forms: definitional oracle against closed forms", {}};
  forms.lines.push_back(check("V.E", name, eE.value, tol.forms));
  forms.lines.push_back(check("V.F", name, eF.value, tol.forms));
  forms.lines.push_back(check("V.G", name, eG.value, tol.forms));
  forms.lines.push_back(check("V.e", name, ee.value, tol.forms));
  forms.lines.push_back(check("V.f", name, ef.value, tol.forms));
  forms.lines.push_back(check("V.g", name, eg.value, tol.forms));
  forms.lines.push_back(check("V.first_det", name, first_det.value, tol.identities, "EG - F^2 = -alpha^2 r^2"));
  forms.lines.push_back(
      check("V.second_det", name, second_det.value, tol.identities, "eg - f^2 = -r kappa alpha cos theta"));
  forms.lines.push_back(check("V.normal", name, normal.value, tol.normal, "U = -cos n - sin b"));
  forms.lines.push_back(check("V.normal_unit", name, normal_sq.value, tol.identities, "<U,U> = 1"));
  forms.lines.push_back(check("V.x_t", name, xt.value, tol.identities, "x_t = alpha t + r tau v"));
  forms.lines.push_back(check("V.x_theta", name, xtheta.value, tol.identities, "x_theta = r v"));

  ReportSection curv{"curvature", "K, H, K_II: closed forms against the oracle", {}};
  curv.lines.push_back(check("V.K", name, eK.value, tol.K));
  curv.lines.push_back(check("V.H", name, eH.value, tol.H, "magnitude"));
  const bool sign_consistent = sign_min == sign_max || (sign_max - sign_min) <= 1e-6 * std::abs(sign_max);
  curv.lines.push_back({sign_consistent && std::abs(std::abs(sign_min) - 1.0) <= tol.H ? CheckStatus::Pass
                                                                                        : CheckStatus::Fail,
                        "V.H.sign_consistency", name, {{"ratio_min", sign_min}, {"ratio_max", sign_max}},
                        "closed-form H over oracle H is one global constant"});
  curv.lines.push_back({CheckStatus::Finding, "V.H.sign", name, {{"closed_over_oracle", sign_max}},
                        sign_max < 0 ? "closed-form H carries the opposite sign of (eG - 2fF + gE)/(2(EG - F^2)) <U,U>"
                                     : "closed-form H agrees in sign with the definitional formula"});
  if (kii_checked) {
    curv.lines.push_back({eKII.value <= tol.KII ? CheckStatus::Pass : CheckStatus::Fail, "V.KII", name,
                          {{"max_rel", eKII.value}, {"tol", tol.KII}, {"points", static_cast<double>(kii_points)},
                           {"valid_fraction", valid_fraction}},
                          "Brioschi oracle on non-degenerate interior points"});
  } else {
    curv.lines.push_back({CheckStatus::Skip, "V.KII", name, {{"valid_fraction", valid_fraction}},
                          "more than half of the grid has a degenerate second fundamental form"});
  }
  curv.lines.push_back(check("V.K.jets", name, jetK.value, tol.jets, "analytic against difference jets"));
  curv.lines.push_back(check("V.H.jets", name, jetH.value, tol.jets, "analytic against difference jets"));

  ReportSection part{"partials", "curvature partials against central differences", {}};
  part.lines.push_back(check("V.K_t", name, pKt.value, tol.partials));
  part.lines.push_back(check("V.K_theta", name, pKth.value, tol.partials));
  part.lines.push_back(check("V.H_t", name, pHt.value, tol.partials, "closed-form H sign"));
  part.lines.push_back(check("V.H_theta", name, pHth.value, tol.partials, "closed-form H sign"));
  if (kii_checked) {
    part.lines.push_back(check("V.KII_theta", name, pKIIth.value, tol.partials, "as printed"));
    if (pKIIt_printed.value <= tol.partials) {
      part.lines.push_back(check("V.KII_t.printed", name, pKIIt_printed.value, tol.partials, "as printed"));
    } else {
      part.lines.push_back({CheckStatus::Finding, "V.KII_t.printed", name,
                            {{"max_rel", pKIIt_printed.value}, {"tol", tol.partials}},
                            "printed t-derivative of K_II disagrees with central differences; "
                            "the 4 r cos^2 term needs a kappa' factor; oracle value used"});
    }
    part.lines.push_back(check("V.KII_t", name, pKIIt.value, tol.partials, "with kappa' on the 4 r cos^2 term"));
  } else {
    part.lines.push_back({CheckStatus::Skip, "V.KII_t", name, {}, "K_II undefined on this tube"});
    part.lines.push_back({CheckStatus::Skip, "V.KII_theta", name, {}, "K_II undefined on this tube"});
  }

  VerificationReport rep;
  rep.sections = {std::move(forms), std::move(curv), std::move(part)};
  return rep;
}

}  // namespace ltube

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

#include "ltube/curve.hpp"
#include "ltube/minkowski.hpp"

namespace ltube {

/// Ambient inner product. Euclidean exists only as a smoke-test hook for the
/// surface machinery (classical identities on round spheres).
enum class Metric { Minkowski, Euclidean };

double metric_inner(Metric m, const MinkVector& a, const MinkVector& b);
MinkVector metric_cross(Metric m, const MinkVector& a, const MinkVector& b);
inline double metric_norm(Metric m, const MinkVector& a) { return std::sqrt(std::abs(metric_inner(m, a, a))); }

/// Position and partials up to order two at (u, v).
struct SurfaceJet {
  MinkVector position;
  MinkVector xu;
  MinkVector xv;
  MinkVector xuu;
  MinkVector xuv;
  MinkVector xvv;
};

struct PatchDomain {
  double u_min = 0.0;
  double u_max = 1.0;
  double v_min = 0.0;
  double v_max = 1.0;
  bool v_periodic = false;
};

class SurfacePatch {
 public:
  using Evaluator = std::function<SurfaceJet(double, double)>;
  using PositionFn = std::function<MinkVector(double, double)>;

  SurfacePatch(Evaluator eval, PatchDomain domain, JetSource source, Metric metric = Metric::Minkowski);

  /// Jets by second-order central differences of a position map with step h.
  static SurfacePatch from_position(PositionFn position, PatchDomain domain, double h = 1e-4,
                                    Metric metric = Metric::Minkowski);

  SurfaceJet jet(double u, double v) const { return eval_(u, v); }
  const PatchDomain& domain() const { return domain_; }
  JetSource source() const { return source_; }
  Metric metric() const { return metric_; }

 private:
  Evaluator eval_;
  PatchDomain domain_;
  JetSource source_;
  Metric metric_;
};

struct FundamentalForms {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;

  double first_det() const { return E * G - F * F; }
  double second_det() const { return e * g - f * f; }
};

/// Unit normal and forms together, since every curvature needs both.
struct SurfacePoint {
  SurfaceJet jet;
  MinkVector normal;
  double eps_normal = 1.0;  // <U,U>
  FundamentalForms forms;
};

/// U = x_u ^ x_v / |x_u ^ x_v|. Throws DegenerateTangentPlane when the
/// product is null or zero (norm <= 1e-10).
MinkVector unit_normal(const SurfacePatch& patch, double u, double v);
FundamentalForms fundamental_forms(const SurfacePatch& patch, double u, double v);
SurfacePoint surface_point(const SurfacePatch& patch, double u, double v);

/// K = eps_normal (eg - f^2) / (EG - F^2). Throws DegenerateMetric when
/// |EG - F^2| <= 1e-14.
double gaussian_curvature(const FundamentalForms& forms, double eps_normal);
/// H = eps_normal (eG - 2fF + gE) / (2 (EG - F^2)).
double mean_curvature(const FundamentalForms& forms, double eps_normal);

/// A symmetric 2-form (P, Q, R) with first and second partials, the input to
/// Brioschi's determinant formula.
struct FormJet {
  double P = 0, Q = 0, R = 0;
  double P_u = 0, P_v = 0, P_uu = 0, P_uv = 0, P_vv = 0;
  double Q_u = 0, Q_v = 0, Q_uu = 0, Q_uv = 0, Q_vv = 0;
  double R_u = 0, R_v = 0, R_uu = 0, R_uv = 0, R_vv = 0;
};

/// Brioschi's formula: (det A - det B) / (PR - Q^2)^2 with
///   A = | -P_vv/2 + Q_uv - R_uu/2   P_u/2   Q_u - P_v/2 |
///       |  Q_v - R_u/2              P       Q           |
///       |  R_v/2                    Q       R           |
///   B = | 0       P_v/2   R_u/2 |
///       | P_v/2   P       Q     |
///       | R_u/2   Q       R     |
/// Fed with (E, F, G) it is the intrinsic Gaussian curvature; fed with the
/// second form (e, f, g) it is the second Gaussian curvature K_II.
double brioschi(const FormJet& form);

struct BrioschiOptions {
  double h_u = 0.0;  // <= 0 selects 1e-3 of the u span
  double h_v = 0.0;  // <= 0 selects 1e-3 of the v span
  bool richardson = true;
  double degeneracy_floor = 1e-10;
};

/// K_II at (u, v): e, f, g are sampled on a 3x3 stencil and differenced, then
/// Brioschi's formula is applied; one Richardson level (h, h/2) by default.
/// Throws DegenerateSecondForm when |eg - f^2| <= floor anywhere on the
/// stencil and StencilOutOfDomain when the stencil leaves a non-periodic axis.
double second_gaussian_curvature(const SurfacePatch& patch, double u, double v,
                                 const BrioschiOptions& options = {});

/// The step actually used for each axis given the options and the domain.
std::pair<double, double> brioschi_steps(const SurfacePatch& patch, const BrioschiOptions& options);

}  // namespace ltube

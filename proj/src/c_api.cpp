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

#include "ltube/ltube.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "ltube/curve.hpp"
#include "ltube/error.hpp"
#include "ltube/export.hpp"
#include "ltube/tube.hpp"
#include "ltube/verify.hpp"
#include "ltube/weingarten.hpp"

struct ltube_curve {
  ltube::TimelikeCurve curve;
};

struct ltube_tube {
  ltube::TubeSurface tube;
};

namespace {

thread_local std::string g_last_error;

ltube_status fail(ltube_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <typename Fn>
ltube_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return LTUBE_OK;
  } catch (const ltube::Error& e) {
    return fail(static_cast<ltube_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LTUBE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LTUBE_ERR_INTERNAL, e.what());
  }
}

#define LTUBE_REQUIRE(p)                                                  \
  do {                                                                    \
    if (!(p)) return fail(LTUBE_ERR_NULL_ARGUMENT, "null argument: " #p); \
  } while (0)

void put3(double* dst, const ltube::MinkVector& v) {
  dst[0] = v.y1;
  dst[1] = v.y2;
  dst[2] = v.y3;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ltube_options resolve(const ltube_options* options) {
  ltube_options o;
  ltube_options_default(&o);
  return options ? *options : o;
}

ltube::SuiteOptions suite_options(const ltube_options& o) {
  ltube::SuiteOptions s;
  s.nt = o.nt;
  s.ntheta = o.ntheta;
  s.weingarten.jacobi_tol = o.tol_jacobi;
  s.weingarten.lw_tol = o.tol_lw;
  s.weingarten.kii_mask_ratio = o.kii_mask_ratio;
  s.thresholds.kh_max_phi = o.tol_w_kh;
  s.thresholds.kii_const_max_phi = o.tol_w_kii;
  s.thresholds.lw_kh_max_residual = o.tol_lw_kh;
  return s;
}

ltube::VerifyOptions verify_options(const ltube_options& o) {
  ltube::VerifyOptions v;
  v.nt = o.nt;
  v.ntheta = o.ntheta;
  v.tol.forms = o.tol_forms;
  v.tol.identities = o.tol_identities;
  v.tol.K = o.tol_K;
  v.tol.H = o.tol_H;
  v.tol.KII = o.tol_KII;
  v.tol.partials = o.tol_partials;
  v.kii_mask_ratio = o.kii_mask_ratio;
  return v;
}

void emit(const ltube::VerificationReport& report, char** out, int* all_pass) {
  *out = dup_string(report.text());
  if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
}

}  // namespace

extern "C" {

const char* ltube_version(void) { return "0.1.0"; }

const char* ltube_status_name(ltube_status status) {
  switch (status) {
    case LTUBE_OK:
      return "Ok";
    case LTUBE_ERR_NULL_ARGUMENT:
      return "NullArgument";
    case LTUBE_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= static_cast<int>(ltube::ErrorCode::Io)) {
    return ltube::error_code_name(static_cast<ltube::ErrorCode>(code));
  }
  return "Unknown";
}

const char* ltube_last_error(void) { return g_last_error.c_str(); }

void ltube_options_default(ltube_options* options) {
  if (!options) return;
  const ltube::VerifyOptions v;
  const ltube::SuiteOptions s;
  options->nt = v.nt;
  options->ntheta = v.ntheta;
  options->tol_forms = v.tol.forms;
  options->tol_identities = v.tol.identities;
  options->tol_K = v.tol.K;
  options->tol_H = v.tol.H;
  options->tol_KII = v.tol.KII;
  options->tol_partials = v.tol.partials;
  options->tol_jacobi = s.weingarten.jacobi_tol;
  options->tol_lw = s.weingarten.lw_tol;
  options->tol_w_kh = s.thresholds.kh_max_phi;
  options->tol_w_kii = s.thresholds.kii_const_max_phi;
  options->tol_lw_kh = s.thresholds.lw_kh_max_residual;
  options->kii_mask_ratio = v.kii_mask_ratio;
}

ltube_status ltube_curve_preset(const char* name, const double* params, size_t n_params, ltube_curve** out) {
  LTUBE_REQUIRE(name);
  LTUBE_REQUIRE(out);
  LTUBE_REQUIRE(params || n_params == 0);
  *out = nullptr;
  return guarded([&] {
    const auto preset = ltube::parse_curve_preset(name);
    std::span<const double> p(params, n_params);
    *out = new ltube_curve{ltube::make_analytic_curve(preset, p, false)};
  });
}

int ltube_curve_preset_known(const char* name) { return name && ltube::is_curve_preset_name(name) ? 1 : 0; }

ltube_status ltube_curve_from_csv(const char* path, ltube_curve** out) {
  LTUBE_REQUIRE(path);
  LTUBE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ltube_curve{ltube::make_sampled_curve(ltube::read_curve_csv(path), path)}; });
}

ltube_status ltube_curve_unit_speed(const ltube_curve* curve, int quad_steps, ltube_curve** out) {
  LTUBE_REQUIRE(curve);
  LTUBE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new ltube_curve{ltube::reparametrize_unit_speed(curve->curve, quad_steps > 0 ? quad_steps : 256)};
  });
}

void ltube_curve_free(ltube_curve* curve) { delete curve; }

int ltube_curve_is_unit_speed(const ltube_curve* curve) { return curve && curve->curve.unit_speed() ? 1 : 0; }

ltube_status ltube_curve_domain(const ltube_curve* curve, double* t_min, double* t_max) {
  LTUBE_REQUIRE(curve);
  if (t_min) *t_min = curve->curve.t_min();
  if (t_max) *t_max = curve->curve.t_max();
  return LTUBE_OK;
}

ltube_status ltube_curve_frenet(const ltube_curve* curve, double s, ltube_frenet* out) {
  LTUBE_REQUIRE(curve);
  LTUBE_REQUIRE(out);
  return guarded([&] {
    const ltube::FrenetJet j = ltube::frenet_jet(curve->curve, s);
    put3(out->t, j.frame.t);
    put3(out->n, j.frame.n);
    put3(out->b, j.frame.b);
    out->kappa = j.frame.kappa;
    out->tau = j.frame.tau;
    out->dkappa = j.dkappa;
  });
}

ltube_status ltube_tube_create(const ltube_curve* curve, double radius, ltube_tube** out) {
  LTUBE_REQUIRE(curve);
  LTUBE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ltube_tube{ltube::make_tube(curve->curve, radius)}; });
}

ltube_status ltube_tube_cylinder(const ltube_curve* line, double radius, const double n[3], const double b[3],
                                 ltube_tube** out) {
  LTUBE_REQUIRE(line);
  LTUBE_REQUIRE(n);
  LTUBE_REQUIRE(b);
  LTUBE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const ltube::NormalFrame frame{{n[0], n[1], n[2]}, {b[0], b[1], b[2]}};
    *out = new ltube_tube{ltube::make_cylinder(line->curve, radius, frame)};
  });
}

void ltube_tube_free(ltube_tube* tube) { delete tube; }

ltube_status ltube_tube_kappa_sup(const ltube_tube* tube, double* out) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(out);
  *out = tube->tube.kappa_sup();
  return LTUBE_OK;
}

ltube_status ltube_tube_evaluate(const ltube_tube* tube, double t, double theta, ltube_point* out) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(out);
  return guarded([&] {
    const ltube::TubePointData d = ltube::evaluate(tube->tube, t, theta);
    const ltube::SurfacePoint sp = ltube::surface_point(tube->tube.patch(), t, theta);
    put3(out->position, d.position);
    out->alpha = d.alpha;
    out->E = d.forms.E;
    out->F = d.forms.F;
    out->G = d.forms.G;
    out->e = d.forms.e;
    out->f = d.forms.f;
    out->g = d.forms.g;
    out->K = d.K;
    out->H_paper = d.H.value();
    out->H_oracle = ltube::mean_curvature(sp.forms, sp.eps_normal);
    out->kii_valid = d.kii_valid ? 1 : 0;
    out->K_II = d.kii_valid ? d.K_II : std::numeric_limits<double>::quiet_NaN();
  });
}

ltube_status ltube_tube_write_obj(const ltube_tube* tube, int nt, int ntheta, int normals, const char* path,
                                  size_t* n_vertices, size_t* n_triangles) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(path);
  return guarded([&] {
    const ltube::TubeGrid grid = ltube::make_tube_grid(tube->tube, nt, ntheta);
    const ltube::MeshStats st = ltube::write_obj_file(tube->tube, grid, normals != 0, path);
    if (n_vertices) *n_vertices = st.vertices;
    if (n_triangles) *n_triangles = st.triangles;
  });
}

ltube_status ltube_tube_write_curvature_csv(const ltube_tube* tube, int nt, int ntheta, const char* path,
                                            size_t* n_rows) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(path);
  return guarded([&] {
    const ltube::TubeGrid grid = ltube::make_tube_grid(tube->tube, nt, ntheta);
    const std::size_t rows = ltube::write_curvature_csv_file(tube->tube, grid, path);
    if (n_rows) *n_rows = rows;
  });
}

ltube_status ltube_tube_classify(const ltube_tube* tube, const char* name, const ltube_options* options,
                                 char** report, int* all_pass) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(report);
  *report = nullptr;
  return guarded([&] {
    const ltube_options o = resolve(options);
    emit(ltube::classify_tube(tube->tube, name ? name : "tube", suite_options(o)), report, all_pass);
  });
}

ltube_status ltube_tube_verify(const ltube_tube* tube, const char* name, const ltube_options* options,
                               char** report, int* all_pass) {
  LTUBE_REQUIRE(tube);
  LTUBE_REQUIRE(report);
  *report = nullptr;
  return guarded([&] {
    const ltube_options o = resolve(options);
    emit(ltube::verify_tube(tube->tube, name ? name : "tube", verify_options(o)), report, all_pass);
  });
}

ltube_status ltube_theorem_suite(const ltube_options* options, char** report, int* all_pass) {
  LTUBE_REQUIRE(report);
  *report = nullptr;
  return guarded([&] {
    const ltube_options o = resolve(options);
    const std::vector<ltube::Fixture> fixtures = ltube::default_fixtures();
    const std::vector<double> radii = ltube::default_radii();
    emit(ltube::theorem_suite(fixtures, radii, suite_options(o)), report, all_pass);
  });
}

void ltube_string_free(char* s) { std::free(s); }

}  // extern "C"

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

/* C interface to the ltube library. Handles are opaque; every fallible call
 * returns an ltube_status and leaves a message in a thread-local buffer read
 * by ltube_last_error(). Report strings are malloc'd and released with
 * ltube_string_free(). */

#ifndef LTUBE_LTUBE_H
#define LTUBE_LTUBE_H

#include <stddef.h>

#if defined(LTUBE_BUILDING_LIBRARY)
#define LTUBE_API __attribute__((visibility("default")))
#else
#define LTUBE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ltube_curve ltube_curve;
typedef struct ltube_tube ltube_tube;

typedef enum ltube_status {
  LTUBE_OK = 0,
  LTUBE_ERR_PARAM_DOMAIN = 1,
  LTUBE_ERR_NOT_TIMELIKE = 2,
  LTUBE_ERR_VANISHING_CURVATURE = 3,
  LTUBE_ERR_RADIUS_TOO_LARGE = 4,
  LTUBE_ERR_DEGENERATE_TANGENT_PLANE = 5,
  LTUBE_ERR_DEGENERATE_METRIC = 6,
  LTUBE_ERR_DEGENERATE_SECOND_FORM = 7,
  LTUBE_ERR_STENCIL_OUT_OF_DOMAIN = 8,
  LTUBE_ERR_SINGULAR_ALPHA = 9,
  LTUBE_ERR_DOMAIN_VIOLATION = 10,
  LTUBE_ERR_GRID_MISMATCH = 11,
  LTUBE_ERR_INSUFFICIENT_VALID_GRID = 12,
  LTUBE_ERR_ILL_CONDITIONED_FIT = 13,
  LTUBE_ERR_TRIVIAL_RELATION = 14,
  LTUBE_ERR_PARSE = 15,
  LTUBE_ERR_IO = 16,
  LTUBE_ERR_NULL_ARGUMENT = 64,
  LTUBE_ERR_INTERNAL = 99
} ltube_status;

typedef struct ltube_frenet {
  double t[3];
  double n[3];
  double b[3];
  double kappa;
  double tau;
  double dkappa;
} ltube_frenet;

typedef struct ltube_point {
  double position[3];
  double alpha;
  double E, F, G;
  double e, f, g;
  double K;
  double H_paper;   /* closed form as printed */
  double H_oracle;  /* definitional value */
  double K_II;      /* NaN unless kii_valid */
  int kii_valid;
} ltube_point;

/* Grid size and tolerance overrides shared by verify, classify and the suite.
 * Fill with ltube_options_default() before changing fields. */
typedef struct ltube_options {
  int nt;
  int ntheta;
  double tol_forms;
  double tol_identities;
  double tol_K;
  double tol_H;
  double tol_KII;
  double tol_partials;
  double tol_jacobi;
  double tol_lw;
  double tol_w_kh;
  double tol_w_kii;
  double tol_lw_kh;
  double kii_mask_ratio;
} ltube_options;

LTUBE_API const char* ltube_version(void);
LTUBE_API const char* ltube_status_name(ltube_status status);
LTUBE_API const char* ltube_last_error(void);
LTUBE_API void ltube_options_default(ltube_options* options);

/* Curves. Presets: line, hyperbola, helix, polynomial. */
LTUBE_API ltube_status ltube_curve_preset(const char* name, const double* params, size_t n_params,
                                          ltube_curve** out);
LTUBE_API int ltube_curve_preset_known(const char* name);
LTUBE_API ltube_status ltube_curve_from_csv(const char* path, ltube_curve** out);
LTUBE_API ltube_status ltube_curve_unit_speed(const ltube_curve* curve, int quad_steps, ltube_curve** out);
LTUBE_API void ltube_curve_free(ltube_curve* curve);
LTUBE_API int ltube_curve_is_unit_speed(const ltube_curve* curve);
LTUBE_API ltube_status ltube_curve_domain(const ltube_curve* curve, double* t_min, double* t_max);
LTUBE_API ltube_status ltube_curve_frenet(const ltube_curve* curve, double s, ltube_frenet* out);

/* Tubes. The cylinder takes an explicit normal frame for a straight line. */
LTUBE_API ltube_status ltube_tube_create(const ltube_curve* curve, double radius, ltube_tube** out);
LTUBE_API ltube_status ltube_tube_cylinder(const ltube_curve* line, double radius, const double n[3],
                                           const double b[3], ltube_tube** out);
LTUBE_API void ltube_tube_free(ltube_tube* tube);
LTUBE_API ltube_status ltube_tube_kappa_sup(const ltube_tube* tube, double* out);
LTUBE_API ltube_status ltube_tube_evaluate(const ltube_tube* tube, double t, double theta, ltube_point* out);

LTUBE_API ltube_status ltube_tube_write_obj(const ltube_tube* tube, int nt, int ntheta, int normals,
                                            const char* path, size_t* n_vertices, size_t* n_triangles);
LTUBE_API ltube_status ltube_tube_write_curvature_csv(const ltube_tube* tube, int nt, int ntheta,
                                                      const char* path, size_t* n_rows);

/* Reports. *all_pass is 1 when no check failed. */
LTUBE_API ltube_status ltube_tube_classify(const ltube_tube* tube, const char* name,
                                           const ltube_options* options, char** report, int* all_pass);
LTUBE_API ltube_status ltube_tube_verify(const ltube_tube* tube, const char* name, const ltube_options* options,
                                         char** report, int* all_pass);
LTUBE_API ltube_status ltube_theorem_suite(const ltube_options* options, char** report, int* all_pass);
LTUBE_API void ltube_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LTUBE_LTUBE_H */

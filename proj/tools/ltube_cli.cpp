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

// ltube command-line front end. Links only the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltube/ltube.h"

namespace {

enum Exit {
  kOk = 0,
  kChecksFailed = 1,
  kRadiusTooLarge = 2,
  kIoFailure = 3,
  kParseFailure = 4,
  kLibraryError = 5,
  kUsage = 64,
};

struct CurveDeleter {
  void operator()(ltube_curve* c) const { ltube_curve_free(c); }
};
struct TubeDeleter {
  void operator()(ltube_tube* t) const { ltube_tube_free(t); }
};
using CurvePtr = std::unique_ptr<ltube_curve, CurveDeleter>;
using TubePtr = std::unique_ptr<ltube_tube, TubeDeleter>;

struct Failure {
  int code;
  std::string message;
};

struct Job {
  std::string curve;
  std::string params;
  double radius = 0.1;
  std::string grid = "64x128";
  std::string out;
  std::string frame;
  bool normals = false;
  int nt = 64;
  int ntheta = 128;
  ltube_options options{};
};

int exit_for(ltube_status s) {
  switch (s) {
    case LTUBE_OK:
      return kOk;
    case LTUBE_ERR_RADIUS_TOO_LARGE:
      return kRadiusTooLarge;
    case LTUBE_ERR_IO:
      return kIoFailure;
    case LTUBE_ERR_PARSE:
      return kParseFailure;
    default:
      return kLibraryError;
  }
}

void check(ltube_status s) {
  if (s != LTUBE_OK) {
    throw Failure{exit_for(s), std::string(ltube_status_name(s)) + ": " + ltube_last_error()};
  }
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0') {
      throw Failure{kUsage, std::string("bad number '") + item + "' in " + what};
    }
    out.push_back(v);
  }
  return out;
}

void parse_grid(Job& job) {
  int nt = 0, nth = 0;
  char tail = 0;
  if (std::sscanf(job.grid.c_str(), "%dx%d%c", &nt, &nth, &tail) != 2) {
    throw Failure{kUsage, "--grid expects NTxNTH, got '" + job.grid + "'"};
  }
  if (nt < 8 || nth < 16) throw Failure{kUsage, "--grid needs nt >= 8 and ntheta >= 16"};
  job.nt = nt;
  job.ntheta = nth;
  job.options.nt = nt;
  job.options.ntheta = nth;
}

CurvePtr load_curve(const Job& job) {
  ltube_curve* raw = nullptr;
  if (ltube_curve_preset_known(job.curve.c_str())) {
    const std::vector<double> p = parse_list(job.params, "--params");
    check(ltube_curve_preset(job.curve.c_str(), p.data(), p.size(), &raw));
  } else {
    if (!job.params.empty()) throw Failure{kUsage, "--params only applies to preset curves"};
    check(ltube_curve_from_csv(job.curve.c_str(), &raw));
  }
  CurvePtr curve(raw);
  if (!ltube_curve_is_unit_speed(curve.get())) {
    ltube_curve* unit = nullptr;
    check(ltube_curve_unit_speed(curve.get(), 0, &unit));
    curve.reset(unit);
  }
  return curve;
}

TubePtr build_tube(const Job& job) {
  if (job.radius <= 0.0) throw Failure{kUsage, "--radius must be positive"};
  CurvePtr curve = load_curve(job);
  ltube_tube* raw = nullptr;
  if (!job.frame.empty()) {
    const std::vector<double> f = parse_list(job.frame, "--frame");
    if (f.size() != 6) throw Failure{kUsage, "--frame expects n1,n2,n3,b1,b2,b3"};
    check(ltube_tube_cylinder(curve.get(), job.radius, f.data(), f.data() + 3, &raw));
  } else {
    check(ltube_tube_create(curve.get(), job.radius, &raw));
  }
  return TubePtr(raw);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw Failure{kIoFailure, "cannot write '" + path + "'"};
}

int report(ltube_status s, char* text, int all_pass, const std::string& out) {
  check(s);
  std::string body(text);
  ltube_string_free(text);
  std::fwrite(body.data(), 1, body.size(), stdout);
  if (!out.empty()) write_text(out, body);
  return all_pass ? kOk : kChecksFailed;
}

void add_job_options(CLI::App* sub, Job& job, bool needs_curve) {
  auto* c = sub->add_option("--curve", job.curve, "preset (line, hyperbola, helix, polynomial) or CSV path s,y1,y2,y3");
  if (needs_curve) c->required();
  sub->add_option("--params", job.params, "comma-separated preset parameters");
  sub->add_option("--radius", job.radius, "tube radius r > 0");
  sub->add_option("--grid", job.grid, "grid NTxNTH (nt >= 8, ntheta >= 16)");
  sub->add_option("--frame", job.frame, "explicit normal frame n1,n2,n3,b1,b2,b3 for a straight line");
}

void add_tolerances(CLI::App* sub, ltube_options& o) {
  sub->add_option("--tol-forms", o.tol_forms);
  sub->add_option("--tol-identities", o.tol_identities);
  sub->add_option("--tol-K", o.tol_K);
  sub->add_option("--tol-H", o.tol_H);
  sub->add_option("--tol-KII", o.tol_KII);
  sub->add_option("--tol-partials", o.tol_partials);
  sub->add_option("--tol-jacobi", o.tol_jacobi);
  sub->add_option("--tol-lw", o.tol_lw);
  sub->add_option("--tol-w-kh", o.tol_w_kh);
  sub->add_option("--tol-w-kii", o.tol_w_kii);
  sub->add_option("--tol-lw-kh", o.tol_lw_kh);
  sub->add_option("--kii-mask-ratio", o.kii_mask_ratio);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timelike tubes in Minkowski 3-space: meshes, curvature fields, checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ltube_version()));

  Job job;
  ltube_options_default(&job.options);

  auto* mesh = app.add_subcommand("mesh", "write a triangulated OBJ of the tube");
  add_job_options(mesh, job, true);
  mesh->add_option("--out", job.out, "output OBJ path")->required();
  mesh->add_flag("--normals", job.normals, "emit per-vertex normals");

  auto* curv = app.add_subcommand("curvature", "write K, H and K_II on the grid as CSV");
  add_job_options(curv, job, true);
  curv->add_option("--out", job.out, "output CSV path")->required();
  add_tolerances(curv, job.options);

  auto* classify = app.add_subcommand("classify", "run the Weingarten checks on one tube");
  add_job_options(classify, job, true);
  classify->add_option("--out", job.out, "also write the report here");
  add_tolerances(classify, job.options);

  auto* verify = app.add_subcommand("verify", "compare closed forms with the definitional oracle");
  add_job_options(verify, job, true);
  verify->add_option("--out", job.out, "also write the report here");
  add_tolerances(verify, job.options);

  auto* suite = app.add_subcommand("suite", "run the Weingarten checks over the built-in fixtures");
  suite->add_option("--grid", job.grid, "grid NTxNTH (nt >= 8, ntheta >= 16)");
  suite->add_option("--out", job.out, "also write the report here");
  add_tolerances(suite, job.options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    parse_grid(job);
    if (*suite) {
      char* text = nullptr;
      int pass = 0;
      const ltube_status s = ltube_theorem_suite(&job.options, &text, &pass);
      return report(s, text, pass, job.out);
    }
    TubePtr tube = build_tube(job);
    if (*mesh) {
      std::size_t nv = 0, nf = 0;
      check(ltube_tube_write_obj(tube.get(), job.nt, job.ntheta, job.normals ? 1 : 0, job.out.c_str(), &nv, &nf));
      std::printf("wrote %s: %zu vertices, %zu triangles\n", job.out.c_str(), nv, nf);
      return kOk;
    }
    if (*curv) {
      std::size_t rows = 0;
      check(ltube_tube_write_curvature_csv(tube.get(), job.nt, job.ntheta, job.out.c_str(), &rows));
      std::printf("wrote %s: %zu rows\n", job.out.c_str(), rows);
      return kOk;
    }
    char* text = nullptr;
    int pass = 0;
    if (*classify) {
      const ltube_status s = ltube_tube_classify(tube.get(), job.curve.c_str(), &job.options, &text, &pass);
      return report(s, text, pass, job.out);
    }
    const ltube_status s = ltube_tube_verify(tube.get(), job.curve.c_str(), &job.options, &text, &pass);
    return report(s, text, pass, job.out);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  }
}

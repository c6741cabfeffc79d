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

#include "ltube/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "ltube/error.hpp"

namespace ltube {

namespace {

std::string g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

template <typename Fn>
auto with_file(const std::string& path, Fn fn) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  auto result = fn(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
  return result;
}

}  // namespace

MeshStats write_obj(const TubeSurface& tube, const TubeGrid& grid, bool normals, std::ostream& out) {
  const std::size_t nt = grid.t.size();
  const std::size_t nth = grid.theta.size();
  out << "# ltube timelike tube mesh\n";
  out << "# curve " << tube.curve().label() << " radius " << g9(tube.radius()) << " grid " << nt << "x" << nth
      << "\n";

  // Orientation from one reference point: det[x_t, x_theta, x - gamma] has a
  // fixed sign over the whole tube.
  bool flip = false;
  {
    const double t0 = grid.t[nt / 2];
    const double th0 = grid.theta[0];
    const SurfaceJet j = tube.patch().jet(t0, th0);
    const MinkVector radial = j.position - tube.curve().jet(t0).position;
    flip = euclid_dot(euclid_cross(j.xu, j.xv), radial) < 0.0;
  }

  for (double t : grid.t) {
    const FrenetJet fj = tube.frame_at(t);
    const MinkVector center = tube.curve().jet(t).position;
    for (double th : grid.theta) {
      const MinkVector radial = std::cos(th) * fj.frame.n + std::sin(th) * fj.frame.b;
      const MinkVector p = center + tube.radius() * radial;
      out << "v " << g9(p.y1) << " " << g9(p.y2) << " " << g9(p.y3) << "\n";
    }
  }
  if (normals) {
    for (double t : grid.t) {
      const FrenetJet fj = tube.frame_at(t);
      for (double th : grid.theta) {
        const MinkVector radial = std::cos(th) * fj.frame.n + std::sin(th) * fj.frame.b;
        const MinkVector n = radial / euclid_norm(radial);
        out << "vn " << g9(n.y1) << " " << g9(n.y2) << " " << g9(n.y3) << "\n";
      }
    }
  }
  auto vid = [nth](std::size_t i, std::size_t j) { return i * nth + (j % nth) + 1; };
  auto face = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (flip) std::swap(b, c);
    if (normals) {
      out << "f " << a << "//" << a << " " << b << "//" << b << " " << c << "//" << c << "\n";
    } else {
      out << "f " << a << " " << b << " " << c << "\n";
    }
  };
  std::size_t triangles = 0;
  for (std::size_t i = 0; i + 1 < nt; ++i) {
    for (std::size_t j = 0; j < nth; ++j) {
      const std::size_t v00 = vid(i, j), v10 = vid(i + 1, j), v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
      face(v00, v10, v11);
      face(v00, v11, v01);
      triangles += 2;
    }
  }
  return {nt * nth, triangles};
}

MeshStats write_obj_file(const TubeSurface& tube, const TubeGrid& grid, bool normals, const std::string& path) {
  return with_file(path, [&](std::ostream& out) { return write_obj(tube, grid, normals, out); });
}

std::size_t write_curvature_csv(const TubeSurface& tube, const TubeGrid& grid, std::ostream& out,
                                double kii_mask_ratio) {
  const std::vector<bool> mask = kii_mask(tube, grid, kii_mask_ratio);
  const SurfacePatch patch = tube.patch();
  out << "t,theta,K,H_paper,H_oracle,KII,KII_valid\n";
  std::size_t rows = 0;
  for (double t : grid.t) {
    const TubeSection sec = tube_section(tube, t);
    for (double th : grid.theta) {
      const SurfacePoint sp = surface_point(patch, t, th);
      const bool valid = mask[rows];
      out << g17(t) << "," << g17(th) << "," << g17(sec.K(th)) << "," << g17(sec.H(th).value()) << ","
          << g17(mean_curvature(sp.forms, sp.eps_normal)) << "," << (valid ? g17(sec.KII(th)) : std::string())
          << "," << (valid ? 1 : 0) << "\n";
      ++rows;
    }
  }
  return rows;
}

std::size_t write_curvature_csv_file(const TubeSurface& tube, const TubeGrid& grid, const std::string& path,
                                     double kii_mask_ratio) {
  return with_file(path, [&](std::ostream& out) { return write_curvature_csv(tube, grid, out, kii_mask_ratio); });
}

}  // namespace ltube

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

#include <iosfwd>
#include <string>

#include "ltube/tube.hpp"

namespace ltube {

struct MeshStats {
  std::size_t vertices = 0;
  std::size_t triangles = 0;
};

/// Triangulated OBJ of the tube sampled on `grid`: vertices row-major over
/// (t, theta) written with 9 significant digits, the theta seam closed by
/// index wrap-around (no duplicated vertices), faces wound so the Euclidean
/// face normal points away from the curve. With `normals`, one `vn` per
/// vertex carries -U = cos n + sin b (Euclidean-normalized).
MeshStats write_obj(const TubeSurface& tube, const TubeGrid& grid, bool normals, std::ostream& out);
MeshStats write_obj_file(const TubeSurface& tube, const TubeGrid& grid, bool normals, const std::string& path);

/// CSV with header `t,theta,K,H_paper,H_oracle,KII,KII_valid`, one row per
/// grid point (t outer), 17 significant digits, LF endings. H_paper is the
/// closed form, H_oracle the definitional value; masked K_II cells are empty.
std::size_t write_curvature_csv(const TubeSurface& tube, const TubeGrid& grid, std::ostream& out,
                                double kii_mask_ratio = kKIIMaskRatio);
std::size_t write_curvature_csv_file(const TubeSurface& tube, const TubeGrid& grid, const std::string& path,
                                     double kii_mask_ratio = kKIIMaskRatio);

}  // namespace ltube

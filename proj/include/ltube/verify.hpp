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

#include "ltube/tube.hpp"
#include "ltube/weingarten.hpp"

namespace ltube {

struct VerifyTolerances {
  double forms = 1e-7;
  double identities = 1e-9;
  double normal = 1e-8;
  double K = 1e-6;
  double H = 1e-6;
  double KII = 1e-3;
  double partials = 1e-5;
  double jets = 1e-5;
};

struct VerifyOptions {
  int nt = 64;
  int ntheta = 128;
  VerifyTolerances tol;
  double kii_mask_ratio = kKIIMaskRatio;
  BrioschiOptions brioschi;
  double fd_jet_step = 1e-4;
};

/// Closed forms against the definitional machinery on the tube's grid:
/// first and second forms, the two determinant identities, the unit normal,
/// x_t, K, H (magnitude plus the global sign finding), K_II against the
/// Brioschi oracle, the six curvature partials against 5-point central
/// differences of their parent fields, and analytic against difference jets.
///
/// Relative errors: forms are measured against the largest component of the
/// same form at the point, partials against the larger partial of the same
/// field at the point, eg - f^2 against |eg| + f^2, difference-jet K and H
/// against the largest |K|, |H| on the same t row, everything else against
/// the reference value itself (absolute when the reference is exactly zero).
VerificationReport verify_tube(const TubeSurface& tube, const std::string& name, const VerifyOptions& options = {});

}  // namespace ltube

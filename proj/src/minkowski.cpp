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

#include "ltube/minkowski.hpp"

#include <algorithm>

#include "ltube/error.hpp"

namespace ltube {

const char* causal_class_name(CausalClass c) noexcept {
  switch (c) {
    case CausalClass::Spacelike:
      return "spacelike";
    case CausalClass::Timelike:
      return "timelike";
    case CausalClass::Lightlike:
      return "lightlike";
    case CausalClass::Zero:
      return "zero";
  }
  return "unknown";
}

CausalClass causal_character(const MinkVector& b, double tol) {
  if (std::max({std::abs(b.y1), std::abs(b.y2), std::abs(b.y3)}) <= tol) return CausalClass::Zero;
  const double q = mink_inner(b, b);
  if (std::abs(q) <= tol * (1.0 + euclid_dot(b, b))) return CausalClass::Lightlike;
  return q < 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParamDomain: return "ParamDomain";
    case ErrorCode::NotTimelike: return "NotTimelike";
    case ErrorCode::VanishingCurvature: return "VanishingCurvature";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::DegenerateTangentPlane: return "DegenerateTangentPlane";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::DegenerateSecondForm: return "DegenerateSecondForm";
    case ErrorCode::StencilOutOfDomain: return "StencilOutOfDomain";
    case ErrorCode::SingularAlpha: return "SingularAlpha";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::InsufficientValidGrid: return "InsufficientValidGrid";
    case ErrorCode::IllConditionedFit: return "IllConditionedFit";
    case ErrorCode::TrivialRelation: return "TrivialRelation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace ltube

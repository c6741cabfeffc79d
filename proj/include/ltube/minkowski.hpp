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

#include <array>
#include <cmath>

namespace ltube {

/// A vector of IR^3_1 in natural coordinates (y1, y2, y3). The first
/// coordinate carries the negative sign of the metric.
struct MinkVector {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? y1 : (i == 1 ? y2 : y3); }

  constexpr MinkVector& operator+=(const MinkVector& o) {
    y1 += o.y1;
    y2 += o.y2;
    y3 += o.y3;
    return *this;
  }
  constexpr MinkVector& operator-=(const MinkVector& o) {
    y1 -= o.y1;
    y2 -= o.y2;
    y3 -= o.y3;
    return *this;
  }
  constexpr MinkVector& operator*=(double s) {
    y1 *= s;
    y2 *= s;
    y3 *= s;
    return *this;
  }

  friend constexpr MinkVector operator+(MinkVector a, const MinkVector& b) { return a += b; }
  friend constexpr MinkVector operator-(MinkVector a, const MinkVector& b) { return a -= b; }
  friend constexpr MinkVector operator-(MinkVector a) { return a *= -1.0; }
  friend constexpr MinkVector operator*(double s, MinkVector a) { return a *= s; }
  friend constexpr MinkVector operator*(MinkVector a, double s) { return a *= s; }
  friend constexpr MinkVector operator/(MinkVector a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const MinkVector&, const MinkVector&) = default;

  bool finite() const { return std::isfinite(y1) && std::isfinite(y2) && std::isfinite(y3); }
};

enum class CausalClass { Spacelike, Timelike, Lightlike, Zero };

const char* causal_class_name(CausalClass c) noexcept;

inline constexpr double kDefaultCausalTol = 1e-10;

/// -b1*m1 + b2*m2 + b3*m3
constexpr double mink_inner(const MinkVector& b, const MinkVector& m) {
  return -b.y1 * m.y1 + b.y2 * m.y2 + b.y3 * m.y3;
}

/// sqrt(|<b,b>|); zero for the zero vector and for null vectors.
inline double mink_norm(const MinkVector& b) { return std::sqrt(std::abs(mink_inner(b, b))); }

/// Lorentzian vector product, component formula
///   (b3 m2 - b2 m3, b3 m1 - b1 m3, b1 m2 - b2 m1).
/// The result is <,>-orthogonal to both arguments.
constexpr MinkVector lorentz_cross(const MinkVector& b, const MinkVector& m) {
  return {b.y3 * m.y2 - b.y2 * m.y3, b.y3 * m.y1 - b.y1 * m.y3, b.y1 * m.y2 - b.y2 * m.y1};
}

/// Sign classification of <b,b>. Values with |<b,b>| <= tol * (1 + |b|_E^2)
/// count as null; the zero vector (all components <= tol) is reported as
/// Zero rather than Spacelike.
CausalClass causal_character(const MinkVector& b, double tol = kDefaultCausalTol);

// Euclidean helpers, used for mesh orientation and the Euclidean test metric.
constexpr double euclid_dot(const MinkVector& a, const MinkVector& b) {
  return a.y1 * b.y1 + a.y2 * b.y2 + a.y3 * b.y3;
}
inline double euclid_norm(const MinkVector& a) { return std::sqrt(euclid_dot(a, a)); }
constexpr MinkVector euclid_cross(const MinkVector& a, const MinkVector& b) {
  return {a.y2 * b.y3 - a.y3 * b.y2, a.y3 * b.y1 - a.y1 * b.y3, a.y1 * b.y2 - a.y2 * b.y1};
}

}  // namespace ltube

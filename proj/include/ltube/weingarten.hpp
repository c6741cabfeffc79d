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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltube/tube.hpp"

namespace ltube {

enum class CurvatureKind { K, H, KII };
enum class WeingartenPair { KH, KKII, HKII };
enum class PartialsSource { ClosedForm, FiniteDifference };

const char* curvature_kind_name(CurvatureKind k) noexcept;
const char* weingarten_pair_name(WeingartenPair p) noexcept;

struct WeingartenOptions {
  PartialsSource partials = PartialsSource::ClosedForm;
  double jacobi_tol = 1e-7;     // closed-form partials
  double jacobi_tol_fd = 1e-4;  // finite-difference partials
  double lw_tol = 1e-7;
  double scale_floor = 1e-12;
  double kii_mask_ratio = kKIIMaskRatio;
  double kappa_prime_tol = 1e-8;
  double min_kii_coverage = 0.5;

  double active_jacobi_tol() const {
    return partials == PartialsSource::ClosedForm ? jacobi_tol : jacobi_tol_fd;
  }
};

/// A scalar curvature sampled on a tube grid, row-major with t outer, with its
/// t and theta partials and a validity mask. H uses the closed-form sign.
struct CurvatureField {
  CurvatureKind kind = CurvatureKind::K;
  TubeGrid grid;
  std::vector<double> value;
  std::vector<double> d_t;
  std::vector<double> d_theta;
  std::vector<bool> valid;

  std::size_t index(std::size_t i, std::size_t j) const { return i * grid.theta.size() + j; }
  double valid_fraction() const;
};

/// Closed-form partials use the corrected t-derivative of K_II (the form that
/// agrees with central differences). Finite-difference partials are 5-point
/// central differences of the closed-form field.
CurvatureField curvature_field(const TubeSurface& tube, const TubeGrid& grid, CurvatureKind kind,
                               const WeingartenOptions& options = {});

/// Pointwise Jacobi determinant phi = X_t Y_theta - X_theta Y_t. The
/// normalized value divides by max(|grad X| |grad Y|, scale_floor), i.e. it is
/// the sine of the angle between the two gradients.
struct JacobiField {
  TubeGrid grid;
  std::vector<double> phi;
  std::vector<double> normalized;
  std::vector<bool> valid;

  double max_normalized() const;
  double max_abs() const;
};

/// Throws GridMismatch when X and Y are sampled on different grids.
JacobiField jacobi_field(const CurvatureField& x, const CurvatureField& y, double scale_floor = 1e-12);

struct KappaPrimeStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  bool constant(double tol) const { return max_abs <= tol; }
};

KappaPrimeStats kappa_prime_stats(const TubeSurface& tube, const TubeGrid& grid);

struct WeingartenReport {
  WeingartenPair pair = WeingartenPair::KH;
  double max_normalized_phi = 0.0;
  double max_abs_phi = 0.0;
  double tolerance = 0.0;
  double valid_fraction = 0.0;
  bool verdict = false;
  KappaPrimeStats kappa_prime;
};

/// One pair. Throws InsufficientValidGrid when a K_II pair has less than
/// min_kii_coverage of the grid non-degenerate.
WeingartenReport weingarten_report(const TubeSurface& tube, const TubeGrid& grid, WeingartenPair pair,
                                   const WeingartenOptions& options = {});
/// All three pairs in the order (K,H), (K,K_II), (H,K_II).
std::vector<WeingartenReport> classify_weingarten(const TubeSurface& tube, const TubeGrid& grid,
                                                  const WeingartenOptions& options = {});

enum class TrigBasis {
  CosPowers,         // cos^k theta, k = 0..max_power
  CosPowersTimesSin  // cos^k theta sin theta, k = 0..max_power
};

struct TrigFit {
  std::vector<double> coefficients;
  double residual_rms = 0.0;
  double condition = 0.0;
};

/// Least-squares coefficients of a theta-sampled function in the given basis.
/// Needs at least 2 (max_power + 1) samples; throws IllConditionedFit when the
/// design matrix condition number exceeds 1e8.
TrigFit trig_coefficients(std::span<const double> theta, std::span<const double> values, TrigBasis basis,
                          int max_power);

struct LinearWeingartenResult {
  std::vector<double> residual;  // |a X + b Y - c|
  std::vector<bool> valid;
  double max_residual = 0.0;
  double max_normalized = 0.0;  // residual / max(|aX|, |bY|, |c|, scale_floor)
  bool verdict = false;
};

/// a X + b Y = c over the grid for the pair's (X, Y). H carries the
/// closed-form sign. Throws TrivialRelation for (a, b, c) = (0, 0, 0).
LinearWeingartenResult linear_weingarten_residual(const TubeSurface& tube, const TubeGrid& grid,
                                                  WeingartenPair pair, double a, double b, double c,
                                                  const WeingartenOptions& options = {});

struct LinearRelationFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// RMS of a' X' + b' Y' - c' with X', Y' scaled to unit RMS and
  /// |(a', b', c')| = 1: the smallest singular value over sqrt(N).
  double normalized_residual = 0.0;
  std::size_t samples = 0;
};

/// Best (a, b, c) for a X + b Y = c in the least-squares sense over valid
/// grid points (smallest right singular vector).
LinearRelationFit best_linear_relation(const TubeSurface& tube, const TubeGrid& grid, WeingartenPair pair,
                                       const WeingartenOptions& options = {});

// ---------------------------------------------------------------------------
// Weingarten verification suite

struct Fixture {
  std::string name;
  TimelikeCurve curve;
  std::optional<NormalFrame> frame;  // set for straight lines
  std::vector<double> radii;         // empty: use the suite radii
};

/// helix (a = sqrt 2, b = w = 1), hyperbola, arclength-reparametrized
/// polynomial, and a line with frame n = (0,1,0), b = (0,0,1) at radius 1.
std::vector<Fixture> default_fixtures();
std::vector<double> default_radii();

struct SuiteThresholds {
  double kh_max_phi = 1e-8;
  double kii_const_max_phi = 1e-6;
  double kii_varying_ratio = 100.0;
  double lw_kh_max_residual = 1e-12;
  double lw_kii_ratio = 100.0;
  double coefficient_tol = 1e-8;
};

enum class CheckStatus { Pass, Fail, Skip, Finding };

const char* check_status_name(CheckStatus s) noexcept;

struct CheckLine {
  CheckStatus status = CheckStatus::Pass;
  std::string id;
  std::string fixture;
  std::vector<std::pair<std::string, double>> values;
  std::string note;

  std::string format() const;
};

struct ReportSection {
  std::string id;
  std::string title;
  std::vector<CheckLine> lines;
};

struct VerificationReport {
  std::vector<ReportSection> sections;

  bool all_pass() const;
  std::size_t count(CheckStatus s) const;
  const CheckLine* find(std::string_view id, std::string_view fixture = {}) const;
  std::string text() const;
};

struct SuiteOptions {
  int nt = 64;
  int ntheta = 128;
  WeingartenOptions weingarten;
  SuiteThresholds thresholds;
};

/// Runs the four Weingarten checks over every fixture and radius. Sections are
/// W.KH, W.KII, LW.KH, LW.KII in that order; parts without a suitable fixture are SKIP.
/// Throws ParamDomain on an empty fixture list.
VerificationReport theorem_suite(std::span<const Fixture> fixtures, std::span<const double> radii,
                                 const SuiteOptions& options = {});

/// The same checks for a single tube (what `classify` runs).
VerificationReport classify_tube(const TubeSurface& tube, const std::string& name, const SuiteOptions& options = {});

}  // namespace ltube

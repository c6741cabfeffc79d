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

#include "ltube/weingarten.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ltube/error.hpp"

namespace ltube {

const char* curvature_kind_name(CurvatureKind k) noexcept {
  switch (k) {
    case CurvatureKind::K: return "K";
    case CurvatureKind::H: return "H";
    case CurvatureKind::KII: return "KII";
  }
  return "?";
}

const char* weingarten_pair_name(WeingartenPair p) noexcept {
  switch (p) {
    case WeingartenPair::KH: return "K,H";
    case WeingartenPair::KKII: return "K,KII";
    case WeingartenPair::HKII: return "H,KII";
  }
  return "?";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::pair<CurvatureKind, CurvatureKind> kinds_of(WeingartenPair p) {
  switch (p) {
    case WeingartenPair::KH: return {CurvatureKind::K, CurvatureKind::H};
    case WeingartenPair::KKII: return {CurvatureKind::K, CurvatureKind::KII};
    case WeingartenPair::HKII: return {CurvatureKind::H, CurvatureKind::KII};
  }
  return {CurvatureKind::K, CurvatureKind::H};
}

bool uses_kii(WeingartenPair p) { return p != WeingartenPair::KH; }

double value_of(const TubeSection& sec, CurvatureKind kind, double theta) {
  switch (kind) {
    case CurvatureKind::K: return sec.K(theta);
    case CurvatureKind::H: return sec.H(theta).value();
    case CurvatureKind::KII: return sec.second_form_regular(theta) ? sec.KII(theta) : kNaN;
  }
  return kNaN;
}

std::pair<double, double> partials_of(const CurvaturePartials& p, CurvatureKind kind) {
  switch (kind) {
    case CurvatureKind::K: return {p.K_t, p.K_theta};
    case CurvatureKind::H: return {p.H_t, p.H_theta};
    case CurvatureKind::KII: return {p.KII_t, p.KII_theta};
  }
  return {kNaN, kNaN};
}

double difference_step_t(const TubeSurface& tube) { return std::min(2e-3, 1e-3 * tube.curve().span()); }
constexpr double kDifferenceStepTheta = 1e-3;

double five_point(double fm2, double fm1, double fp1, double fp2, double h) {
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

// All three closed-form fields of one tube, evaluated once.
struct TubeFields {
  CurvatureField K;
  CurvatureField H;
  CurvatureField KII;
  const CurvatureField& get(CurvatureKind k) const {
    return k == CurvatureKind::K ? K : (k == CurvatureKind::H ? H : KII);
  }
};

TubeFields all_fields(const TubeSurface& tube, const TubeGrid& grid, const WeingartenOptions& options) {
  return {curvature_field(tube, grid, CurvatureKind::K, options),
          curvature_field(tube, grid, CurvatureKind::H, options),
          curvature_field(tube, grid, CurvatureKind::KII, options)};
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

double CurvatureField::valid_fraction() const {
  if (valid.empty()) return 0.0;
  return static_cast<double>(std::count(valid.begin(), valid.end(), true)) / static_cast<double>(valid.size());
}

CurvatureField curvature_field(const TubeSurface& tube, const TubeGrid& grid, CurvatureKind kind,
                               const WeingartenOptions& options) {
  CurvatureField f;
  f.kind = kind;
  f.grid = grid;
  const std::size_t n = grid.size();
  f.value.resize(n);
  f.d_t.resize(n);
  f.d_theta.resize(n);
  f.valid.assign(n, true);
  if (kind == CurvatureKind::KII) f.valid = kii_mask(tube, grid, options.kii_mask_ratio);

  const double ht = difference_step_t(tube);
  const double hth = kDifferenceStepTheta;
  for (std::size_t i = 0; i < grid.t.size(); ++i) {
    const double t = grid.t[i];
    const TubeSection sec = tube_section(tube, t);
    std::array<TubeSection, 4> near{};
    if (options.partials == PartialsSource::FiniteDifference) {
      near = {tube_section(tube, t - 2 * ht), tube_section(tube, t - ht), tube_section(tube, t + ht),
              tube_section(tube, t + 2 * ht)};
    }
    for (std::size_t j = 0; j < grid.theta.size(); ++j) {
      const double th = grid.theta[j];
      const std::size_t k = f.index(i, j);
      f.value[k] = value_of(sec, kind, th);
      if (!std::isfinite(f.value[k])) f.valid[k] = false;
      if (options.partials == PartialsSource::ClosedForm) {
        std::tie(f.d_t[k], f.d_theta[k]) = partials_of(sec.partials(th, PartialsForm::Corrected), kind);
      } else {
        f.d_t[k] = five_point(value_of(near[0], kind, th), value_of(near[1], kind, th),
                              value_of(near[2], kind, th), value_of(near[3], kind, th), ht);
        f.d_theta[k] = five_point(value_of(sec, kind, th - 2 * hth), value_of(sec, kind, th - hth),
                                  value_of(sec, kind, th + hth), value_of(sec, kind, th + 2 * hth), hth);
      }
      if (!std::isfinite(f.d_t[k]) || !std::isfinite(f.d_theta[k])) f.valid[k] = false;
    }
  }
  return f;
}

double JacobiField::max_normalized() const {
  double m = 0.0;
  for (std::size_t k = 0; k < normalized.size(); ++k) {
    if (valid[k]) m = std::max(m, normalized[k]);
  }
  return m;
}

double JacobiField::max_abs() const {
  double m = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (valid[k]) m = std::max(m, std::abs(phi[k]));
  }
  return m;
}

JacobiField jacobi_field(const CurvatureField& x, const CurvatureField& y, double scale_floor) {
  if (x.grid.t != y.grid.t || x.grid.theta != y.grid.theta || x.value.size() != y.value.size()) {
    throw Error(ErrorCode::GridMismatch, std::string("fields ") + curvature_kind_name(x.kind) + " and " +
                                             curvature_kind_name(y.kind) + " live on different grids");
  }
  JacobiField out;
  out.grid = x.grid;
  const std::size_t n = x.value.size();
  out.phi.resize(n);
  out.normalized.resize(n);
  out.valid.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.valid[k] = x.valid[k] && y.valid[k];
    if (!out.valid[k]) {
      out.phi[k] = kNaN;
      out.normalized[k] = kNaN;
      continue;
    }
    out.phi[k] = x.d_t[k] * y.d_theta[k] - x.d_theta[k] * y.d_t[k];
    const double scale = std::hypot(x.d_t[k], x.d_theta[k]) * std::hypot(y.d_t[k], y.d_theta[k]);
    out.normalized[k] = std::abs(out.phi[k]) / std::max(scale, scale_floor);
  }
  return out;
}

KappaPrimeStats kappa_prime_stats(const TubeSurface& tube, const TubeGrid& grid) {
  KappaPrimeStats s;
  if (grid.t.empty()) return s;
  double sum = 0.0;
  for (double t : grid.t) {
    const double kp = std::abs(tube_section(tube, t).dkappa);
    s.max_abs = std::max(s.max_abs, kp);
    sum += kp;
  }
  s.mean_abs = sum / static_cast<double>(grid.t.size());
  return s;
}

namespace {

WeingartenReport report_from_fields(const TubeFields& fields, WeingartenPair pair, const KappaPrimeStats& kp,
                                    const WeingartenOptions& options) {
  const auto [xk, yk] = kinds_of(pair);
  const CurvatureField& x = fields.get(xk);
  const CurvatureField& y = fields.get(yk);
  WeingartenReport r;
  r.pair = pair;
  r.kappa_prime = kp;
  r.valid_fraction = uses_kii(pair) ? fields.KII.valid_fraction() : 1.0;
  if (uses_kii(pair) && r.valid_fraction < options.min_kii_coverage) {
    throw Error(ErrorCode::InsufficientValidGrid,
                std::string("pair (") + weingarten_pair_name(pair) + ") has only " + fmt_num(r.valid_fraction) +
                    " of the grid with a non-degenerate second fundamental form");
  }
  const JacobiField j = jacobi_field(x, y, options.scale_floor);
  r.max_normalized_phi = j.max_normalized();
  r.max_abs_phi = j.max_abs();
  r.tolerance = options.active_jacobi_tol();
  r.verdict = r.max_normalized_phi <= r.tolerance;
  return r;
}

}  // namespace

WeingartenReport weingarten_report(const TubeSurface& tube, const TubeGrid& grid, WeingartenPair pair,
                                   const WeingartenOptions& options) {
  const auto [xk, yk] = kinds_of(pair);
  TubeFields fields;
  fields.K = curvature_field(tube, grid, CurvatureKind::K, options);
  if (xk == CurvatureKind::H || yk == CurvatureKind::H) fields.H = curvature_field(tube, grid, CurvatureKind::H, options);
  if (uses_kii(pair)) fields.KII = curvature_field(tube, grid, CurvatureKind::KII, options);
  return report_from_fields(fields, pair, kappa_prime_stats(tube, grid), options);
}

std::vector<WeingartenReport> classify_weingarten(const TubeSurface& tube, const TubeGrid& grid,
                                                  const WeingartenOptions& options) {
  const TubeFields fields = all_fields(tube, grid, options);
  const KappaPrimeStats kp = kappa_prime_stats(tube, grid);
  return {report_from_fields(fields, WeingartenPair::KH, kp, options),
          report_from_fields(fields, WeingartenPair::KKII, kp, options),
          report_from_fields(fields, WeingartenPair::HKII, kp, options)};
}

TrigFit trig_coefficients(std::span<const double> theta, std::span<const double> values, TrigBasis basis,
                          int max_power) {
  if (max_power < 0) throw Error(ErrorCode::ParamDomain, "max_power must be >= 0");
  const std::size_t cols = static_cast<std::size_t>(max_power) + 1;
  if (theta.size() != values.size()) throw Error(ErrorCode::ParamDomain, "theta and values differ in length");
  if (theta.size() < 2 * cols) {
    throw Error(ErrorCode::ParamDomain, "need at least " + std::to_string(2 * cols) + " theta samples, got " +
                                            std::to_string(theta.size()));
  }
  Eigen::MatrixXd A(static_cast<Eigen::Index>(theta.size()), static_cast<Eigen::Index>(cols));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(theta.size()));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double c = std::cos(theta[i]);
    double p = basis == TrigBasis::CosPowers ? 1.0 : std::sin(theta[i]);
    for (std::size_t k = 0; k < cols; ++k) {
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = p;
      p *= c;
    }
    rhs(static_cast<Eigen::Index>(i)) = values[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  TrigFit fit;
  fit.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (!(fit.condition <= 1e8)) {
    throw Error(ErrorCode::IllConditionedFit, "trigonometric design matrix has condition number " +
                                                  fmt_num(fit.condition));
  }
  const Eigen::VectorXd x = svd.solve(rhs);
  fit.coefficients.assign(x.data(), x.data() + x.size());
  fit.residual_rms = std::sqrt((A * x - rhs).squaredNorm() / static_cast<double>(theta.size()));
  return fit;
}

namespace {

LinearWeingartenResult linear_from_fields(const TubeFields& fields, WeingartenPair pair, double a, double b,
                                          double c, const WeingartenOptions& options) {
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw Error(ErrorCode::TrivialRelation, "(a, b, c) = (0, 0, 0) is not a Weingarten relation");
  }
  const auto [xk, yk] = kinds_of(pair);
  const CurvatureField& x = fields.get(xk);
  const CurvatureField& y = fields.get(yk);
  LinearWeingartenResult r;
  const std::size_t n = x.value.size();
  r.residual.resize(n);
  r.valid.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.valid[k] = x.valid[k] && y.valid[k];
    if (!r.valid[k]) {
      r.residual[k] = kNaN;
      continue;
    }
    const double ax = a * x.value[k];
    const double by = b * y.value[k];
    r.residual[k] = std::abs(ax + by - c);
    r.max_residual = std::max(r.max_residual, r.residual[k]);
    const double scale = std::max({std::abs(ax), std::abs(by), std::abs(c), options.scale_floor});
    r.max_normalized = std::max(r.max_normalized, r.residual[k] / scale);
  }
  r.verdict = r.max_normalized <= options.lw_tol;
  return r;
}

LinearRelationFit best_fit_from_fields(const TubeFields& fields, WeingartenPair pair) {
  const auto [xk, yk] = kinds_of(pair);
  const CurvatureField& x = fields.get(xk);
  const CurvatureField& y = fields.get(yk);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < x.value.size(); ++k) {
    if (x.valid[k] && y.valid[k]) idx.push_back(k);
  }
  if (idx.size() < 3) throw Error(ErrorCode::InsufficientValidGrid, "fewer than 3 valid points for a linear fit");
  double sx = 0.0, sy = 0.0;
  for (std::size_t k : idx) {
    sx += x.value[k] * x.value[k];
    sy += y.value[k] * y.value[k];
  }
  const double nn = static_cast<double>(idx.size());
  sx = std::sqrt(sx / nn);
  sy = std::sqrt(sy / nn);
  if (sx == 0.0) sx = 1.0;
  if (sy == 0.0) sy = 1.0;
  Eigen::MatrixXd A(static_cast<Eigen::Index>(idx.size()), 3);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    A(row, 0) = x.value[idx[r]] / sx;
    A(row, 1) = y.value[idx[r]] / sy;
    A(row, 2) = -1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
  const Eigen::Vector3d w = svd.matrixV().col(2);
  LinearRelationFit fit;
  fit.a = w(0) / sx;
  fit.b = w(1) / sy;
  fit.c = w(2);
  fit.normalized_residual = svd.singularValues()(2) / std::sqrt(nn);
  fit.samples = idx.size();
  return fit;
}

}  // namespace

LinearWeingartenResult linear_weingarten_residual(const TubeSurface& tube, const TubeGrid& grid,
                                                  WeingartenPair pair, double a, double b, double c,
                                                  const WeingartenOptions& options) {
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw Error(ErrorCode::TrivialRelation, "(a, b, c) = (0, 0, 0) is not a Weingarten relation");
  }
  return linear_from_fields(all_fields(tube, grid, options), pair, a, b, c, options);
}

LinearRelationFit best_linear_relation(const TubeSurface& tube, const TubeGrid& grid, WeingartenPair pair,
                                       const WeingartenOptions& options) {
  return best_fit_from_fields(all_fields(tube, grid, options), pair);
}

// ---------------------------------------------------------------------------

std::vector<double> default_radii() { return {0.05, 0.1, 0.3}; }

std::vector<Fixture> default_fixtures() {
  const double helix[] = {std::numbers::sqrt2, 1.0, 1.0};
  std::vector<Fixture> out;
  out.push_back({"helix", make_analytic_curve(CurvePreset::TimelikeHelix, helix), std::nullopt, {}});
  out.push_back({"hyperbola", make_analytic_curve(CurvePreset::TimelikeHyperbola, {}), std::nullopt, {}});
  out.push_back({"polynomial",
                 reparametrize_unit_speed(make_analytic_curve(CurvePreset::PolynomialTimelike, {})),
                 std::nullopt,
                 {}});
  out.push_back({"cylinder", make_analytic_curve(CurvePreset::TimelikeLine, {}),
                 NormalFrame{{0, 1, 0}, {0, 0, 1}}, {1.0}});
  return out;
}

const char* check_status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    case CheckStatus::Finding: return "FINDING";
  }
  return "?";
}

std::string CheckLine::format() const {
  std::string s = std::string(check_status_name(status)) + " " + id;
  if (!fixture.empty()) s += " fixture=" + fixture;
  for (const auto& [k, v] : values) s += " " + k + "=" + fmt_num(v);
  if (!note.empty()) s += " # " + note;
  return s;
}

bool VerificationReport::all_pass() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus st) const {
  std::size_t n = 0;
  for (const auto& sec : sections) {
    for (const auto& l : sec.lines) n += l.status == st ? 1 : 0;
  }
  return n;
}

const CheckLine* VerificationReport::find(std::string_view id, std::string_view fixture) const {
  for (const auto& sec : sections) {
    for (const auto& l : sec.lines) {
      if (l.id == id && (fixture.empty() || l.fixture == fixture)) return &l;
    }
  }
  return nullptr;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  for (const auto& sec : sections) {
    os << "[" << sec.id << "] " << sec.title << "\n";
    for (const auto& l : sec.lines) os << l.format() << "\n";
  }
  os << "SUMMARY pass=" << count(CheckStatus::Pass) << " fail=" << count(CheckStatus::Fail)
     << " skip=" << count(CheckStatus::Skip) << " finding=" << count(CheckStatus::Finding) << "\n";
  return os.str();
}

namespace {

struct Sections {
  ReportSection w_kh{"W.KH", "(K,H) Jacobi determinant vanishes on every timelike tube", {}};
  ReportSection w_kii{"W.KII", "(K,K_II) and (H,K_II) Weingarten iff kappa is constant", {}};
  ReportSection lw_kh{"LW.KH", "aK + bH = c forces b = -2rc and kappa (a + c r^2) = 0", {}};
  ReportSection lw_kii{"LW.KII", "no (K,K_II) or (H,K_II) linear Weingarten tube", {}};
  bool saw_const = false;
  bool saw_varying = false;
  bool saw_cylinder = false;
};

CheckLine line(bool ok, std::string id, const std::string& fixture,
               std::vector<std::pair<std::string, double>> values, std::string note = {}) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(id), fixture, std::move(values), std::move(note)};
}

// Samples of one theta row (t index i) where the mask holds.
struct Row {
  std::vector<double> theta;
  std::vector<double> values;
};

template <typename Fn>
Row sample_row(const TubeFields& fields, std::size_t i, bool need_kii, Fn fn) {
  Row row;
  const TubeGrid& g = fields.K.grid;
  for (std::size_t j = 0; j < g.theta.size(); ++j) {
    const std::size_t k = fields.K.index(i, j);
    if (need_kii && !fields.KII.valid[k]) continue;
    row.theta.push_back(g.theta[j]);
    row.values.push_back(fn(k, g.theta[j]));
  }
  return row;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void add_coefficient_values(std::vector<std::pair<std::string, double>>& out, const std::string& prefix,
                            const std::vector<double>& c) {
  for (std::size_t k = 0; k < c.size(); ++k) out.emplace_back(prefix + std::to_string(k), c[k]);
}

void check_tube(Sections& s, const TubeSurface& tube, const std::string& name, const SuiteOptions& opt) {
  const TubeGrid grid = make_tube_grid(tube, opt.nt, opt.ntheta);
  const WeingartenOptions& wo = opt.weingarten;
  const SuiteThresholds& th = opt.thresholds;
  const TubeFields fields = all_fields(tube, grid, wo);
  const KappaPrimeStats kp = kappa_prime_stats(tube, grid);
  const double r = tube.radius();
  const std::size_t mid = grid.t.size() / 2;
  const TubeSection sec = tube_section(tube, grid.t[mid]);
  const bool cylinder = tube.has_explicit_frame();

  // W.KH
  {
    const WeingartenReport rep = report_from_fields(fields, WeingartenPair::KH, kp, wo);
    s.w_kh.lines.push_back(line(rep.max_normalized_phi <= th.kh_max_phi, "W.KH", name,
                               {{"max_norm_phi", rep.max_normalized_phi}, {"tol", th.kh_max_phi}}));
    WeingartenOptions fd = wo;
    fd.partials = PartialsSource::FiniteDifference;
    const JacobiField j = jacobi_field(curvature_field(tube, grid, CurvatureKind::K, fd),
                                       curvature_field(tube, grid, CurvatureKind::H, fd), wo.scale_floor);
    s.w_kh.lines.push_back(line(j.max_normalized() <= wo.jacobi_tol_fd, "W.KH.fd", name,
                               {{"max_norm_phi", j.max_normalized()}, {"tol", wo.jacobi_tol_fd}},
                               "finite-difference partials"));
  }

  const bool kii_usable = !cylinder && fields.KII.valid_fraction() >= wo.min_kii_coverage;

  // W.KII
  if (!kii_usable) {
    s.w_kii.lines.push_back({CheckStatus::Skip, "W.KII", name, {{"kii_valid_fraction", fields.KII.valid_fraction()}},
                           "second fundamental form degenerate"});
  } else {
    const bool constant = kp.constant(wo.kappa_prime_tol);
    (constant ? s.saw_const : s.saw_varying) = true;
    for (WeingartenPair p : {WeingartenPair::KKII, WeingartenPair::HKII}) {
      const WeingartenReport rep = report_from_fields(fields, p, kp, wo);
      const std::string pair = weingarten_pair_name(p);
      if (constant) {
        s.w_kii.lines.push_back(line(rep.max_normalized_phi <= th.kii_const_max_phi, "W.KII.const", name,
                                   {{"max_norm_phi", rep.max_normalized_phi},
                                    {"tol", th.kii_const_max_phi},
                                    {"max_abs_dkappa", kp.max_abs}},
                                   "pair " + pair + ", constant kappa"));
      } else {
        const double need = th.kii_varying_ratio * th.kii_const_max_phi;
        s.w_kii.lines.push_back(line(rep.max_normalized_phi >= need, "W.KII.varying", name,
                                   {{"max_norm_phi", rep.max_normalized_phi},
                                    {"min_required", need},
                                    {"max_abs_dkappa", kp.max_abs}},
                                   "pair " + pair + ", varying kappa"));
      }
    }
    // phi(K,K_II) 2 r^2 alpha^4 cos^2 in the basis cos^k sin, k <= 2.
    const CurvatureField& K = fields.K;
    const CurvatureField& KII = fields.KII;
    const Row row = sample_row(fields, mid, true, [&](std::size_t k, double t) {
      const double phi = K.d_t[k] * KII.d_theta[k] - K.d_theta[k] * KII.d_t[k];
      const double a = sec.alpha(t);
      return phi * 2 * r * r * a * a * a * a * std::cos(t) * std::cos(t);
    });
    const TrigFit fit = trig_coefficients(row.theta, row.values, TrigBasis::CosPowersTimesSin, 2);
    const double scale = std::max(1.0, std::abs(sec.dkappa));
    const double largest = max_abs(fit.coefficients);
    std::vector<std::pair<std::string, double>> vals;
    add_coefficient_values(vals, "c", fit.coefficients);
    vals.emplace_back("dkappa", sec.dkappa);
    vals.emplace_back("fit_rms", fit.residual_rms);
    s.w_kii.lines.push_back(line(constant ? largest <= th.coefficient_tol * scale : largest > th.coefficient_tol * scale,
                               "W.KII.coeffs", name, vals,
                               constant ? "all coefficients vanish" : "coefficients do not all vanish"));
    std::vector<std::pair<std::string, double>> printed;
    add_coefficient_values(printed, "fit_c", fit.coefficients);
    add_coefficient_values(printed, "printed_c",
                           {sec.dkappa, 2 * r * sec.kappa * sec.dkappa, r * r * sec.kappa * sec.kappa * sec.dkappa});
    s.w_kii.lines.push_back({CheckStatus::Finding, "W.KII.numerator", name, printed,
                           "Jacobi numerator is dkappa sin(theta) alone; the printed cubic differs but also "
                           "vanishes iff dkappa = 0"});
  }

  // LW.KH
  if (cylinder) {
    s.saw_cylinder = true;
    const std::array<std::pair<double, double>, 5> ac = {{{1.0, 1.0}, {-2.0, 0.5}, {0.3, -1.7}, {5.0, 1.0 / 3.0}, {0.0, 2.0}}};
    for (const auto& [a, c] : ac) {
      const double b = -2 * r * c;
      const LinearWeingartenResult lw = linear_from_fields(fields, WeingartenPair::KH, a, b, c, wo);
      s.lw_kh.lines.push_back(line(lw.max_residual <= th.lw_kh_max_residual, "LW.KH.family", name,
                                 {{"a", a}, {"b", b}, {"c", c}, {"max_residual", lw.max_residual},
                                  {"tol", th.lw_kh_max_residual}}));
    }
    // The residual is affine in b; the constant coefficient at b = 0 and b = 1 locates its root.
    const double a = 0.7, c = 1.3;
    auto const_coeff = [&](double b) {
      const Row row = sample_row(fields, mid, false, [&](std::size_t k, double) {
        return a * fields.K.value[k] + b * fields.H.value[k] - c;
      });
      return trig_coefficients(row.theta, row.values, TrigBasis::CosPowers, 2).coefficients;
    };
    const std::vector<double> c0 = const_coeff(0.0);
    const std::vector<double> c1 = const_coeff(1.0);
    const double b_star = -c0[0] / (c1[0] - c0[0]);
    const std::vector<double> at_root = const_coeff(b_star);
    const double err = std::abs(b_star + 2 * r * c);
    s.lw_kh.lines.push_back(line(err <= th.coefficient_tol * std::max(1.0, std::abs(b_star)) &&
                                   max_abs(at_root) <= th.coefficient_tol,
                               "LW.KH.extract", name,
                               {{"b_recovered", b_star}, {"b_expected", -2 * r * c}, {"abs_error", err},
                                {"max_coeff_at_root", max_abs(at_root)}}));
  } else {
    // (aK + bH - c) 2 r alpha = (-b - 2rc) + 2 kappa (a - br - r^2 c) cos
    const double a = 0.7, b = -0.4, c = 1.3;
    const Row row = sample_row(fields, mid, false, [&](std::size_t k, double t) {
      return (a * fields.K.value[k] + b * fields.H.value[k] - c) * 2 * r * sec.alpha(t);
    });
    const TrigFit fit = trig_coefficients(row.theta, row.values, TrigBasis::CosPowers, 2);
    const std::vector<double> expect = {-b - 2 * r * c, 2 * sec.kappa * (a - b * r - r * r * c), 0.0};
    const double err = max_abs_diff(fit.coefficients, expect);
    std::vector<std::pair<std::string, double>> vals;
    add_coefficient_values(vals, "c", fit.coefficients);
    vals.emplace_back("max_error", err);
    s.lw_kh.lines.push_back(line(err <= th.coefficient_tol * std::max(1.0, max_abs(expect)), "LW.KH.coeffs", name, vals));

    // b = -2rc with a + c r^2 = 0 is a relation on every tube.
    const double cc = 1.0, bb = -2 * r * cc, aa = -cc * r * r;
    const LinearWeingartenResult hold = linear_from_fields(fields, WeingartenPair::KH, aa, bb, cc, wo);
    s.lw_kh.lines.push_back(line(hold.max_normalized <= th.lw_kh_max_residual, "LW.KH.cond", name,
                               {{"a", aa}, {"b", bb}, {"c", cc}, {"max_norm_residual", hold.max_normalized}},
                               "a + c r^2 = 0 admits a non-cylindrical tube"));
    s.lw_kh.lines.push_back({CheckStatus::Finding, "LW.KH.hypothesis", name,
                           {{"a_plus_b_r", aa + bb * r}, {"a_plus_c_r2", aa + cc * r * r}},
                           "relation holds although a + b r != 0; the derivation's condition is a + c r^2"});
    const LinearWeingartenResult reject = linear_from_fields(fields, WeingartenPair::KH, 1.0, bb, cc, wo);
    s.lw_kh.lines.push_back(line(!reject.verdict, "LW.KH.reject", name,
                               {{"a", 1.0}, {"b", bb}, {"c", cc}, {"max_norm_residual", reject.max_normalized}},
                               "b = -2rc with a + c r^2 != 0 fails when kappa != 0"));
  }

  // LW.KII
  if (!kii_usable) {
    s.lw_kii.lines.push_back({CheckStatus::Skip, "LW.KII", name, {{"kii_valid_fraction", fields.KII.valid_fraction()}},
                           "second fundamental form degenerate"});
    return;
  }
  const double need = th.lw_kii_ratio * wo.lw_tol;
  for (WeingartenPair p : {WeingartenPair::KKII, WeingartenPair::HKII}) {
    const LinearRelationFit fit = best_fit_from_fields(fields, p);
    s.lw_kii.lines.push_back(line(fit.normalized_residual >= need, "LW.KII", name,
                               {{"best_norm_residual", fit.normalized_residual}, {"min_required", need},
                                {"a", fit.a}, {"b", fit.b}, {"c", fit.c}},
                               std::string("pair ") + weingarten_pair_name(p)));
    double lattice_min = std::numeric_limits<double>::infinity();
    for (int ia = -4; ia <= 4; ++ia) {
      for (int ib = -4; ib <= 4; ++ib) {
        if (ib == 0) continue;
        for (int ic = -4; ic <= 4; ++ic) {
          const LinearWeingartenResult lw = linear_from_fields(fields, p, 0.5 * ia, 0.5 * ib, 0.5 * ic, wo);
          lattice_min = std::min(lattice_min, lw.max_normalized);
        }
      }
    }
    s.lw_kii.lines.push_back(line(lattice_min > wo.lw_tol, "LW.KII.lattice", name,
                               {{"min_norm_residual", lattice_min}, {"lw_tol", wo.lw_tol}},
                               std::string("pair ") + weingarten_pair_name(p) + ", a,b,c in {-2..2} step 0.5, b != 0"));
    // cleared denominators 4 r alpha^2 cos^2 against the cos^k coefficient system
    const double a = 0.7, b = -0.4, c = 1.3;
    const double k = sec.kappa;
    const CurvatureField& X = p == WeingartenPair::KKII ? fields.K : fields.H;
    const Row row = sample_row(fields, mid, true, [&](std::size_t idx, double t) {
      const double al = sec.alpha(t);
      const double cs = std::cos(t);
      return (a * X.value[idx] + b * fields.KII.value[idx] - c) * 4 * r * al * al * cs * cs;
    });
    const TrigFit fit4 = trig_coefficients(row.theta, row.values, TrigBasis::CosPowers, 4);
    std::vector<double> expect;
    if (p == WeingartenPair::KKII) {
      expect = {b, 0.0, b - 4 * c * r, 4 * a * k + 6 * b * r * k - 8 * c * r * r * k,
                4 * a * r * k * k + 4 * b * r * r * k * k - 4 * c * r * r * r * k * k};
    } else {
      expect = {b, 0.0, -2 * a + b - 4 * c * r, -6 * a * r * k + 6 * b * r * k - 8 * c * r * r * k,
                -4 * a * r * r * k * k + 4 * b * r * r * k * k - 4 * c * r * r * r * k * k};
    }
    const double err = max_abs_diff(fit4.coefficients, expect);
    std::vector<std::pair<std::string, double>> vals;
    add_coefficient_values(vals, "c", fit4.coefficients);
    vals.emplace_back("max_error", err);
    s.lw_kii.lines.push_back(line(err <= th.coefficient_tol * std::max(1.0, max_abs(expect)), "LW.KII.coeffs", name, vals,
                               std::string("pair ") + weingarten_pair_name(p)));
  }
}

std::string tube_name(const std::string& fixture, double r) {
  std::ostringstream os;
  os << fixture << "@r=" << r;
  return os.str();
}

TubeSurface build(const Fixture& f, double r) {
  return f.frame ? make_cylinder(f.curve, r, *f.frame) : make_tube(f.curve, r);
}

VerificationReport finish(Sections& s, bool suite) {
  if (suite) {
    const bool both = s.saw_const && s.saw_varying;
    if (both) {
      s.w_kii.lines.push_back({CheckStatus::Pass, "W.KII.both", "", {}, "constant and varying kappa branches exercised"});
    } else {
      s.w_kii.lines.push_back({CheckStatus::Skip, "W.KII.both", "", {},
                             s.saw_varying ? "only the contrapositive branch was exercised"
                                           : "only the constant-kappa branch was exercised"});
    }
    if (!s.saw_cylinder) {
      s.lw_kh.lines.push_back({CheckStatus::Skip, "LW.KH.family", "", {}, "no straight-line fixture"});
    }
  }
  VerificationReport rep;
  rep.sections = {std::move(s.w_kh), std::move(s.w_kii), std::move(s.lw_kh), std::move(s.lw_kii)};
  return rep;
}

}  // namespace

VerificationReport theorem_suite(std::span<const Fixture> fixtures, std::span<const double> radii,
                                 const SuiteOptions& options) {
  if (fixtures.empty()) throw Error(ErrorCode::ParamDomain, "theorem suite needs at least one fixture");
  Sections s;
  for (const Fixture& f : fixtures) {
    const std::span<const double> rs = f.radii.empty() ? radii : std::span<const double>(f.radii);
    if (rs.empty()) throw Error(ErrorCode::ParamDomain, "fixture '" + f.name + "' has no radii");
    for (double r : rs) check_tube(s, build(f, r), tube_name(f.name, r), options);
  }
  return finish(s, true);
}

VerificationReport classify_tube(const TubeSurface& tube, const std::string& name, const SuiteOptions& options) {
  Sections s;
  check_tube(s, tube, name, options);
  return finish(s, false);
}

}  // namespace ltube

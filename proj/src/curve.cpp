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

#include "ltube/curve.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "ltube/error.hpp"

namespace ltube {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

double speed_squared(const CurveJet& j) { return -mink_inner(j.d1, j.d1); }

void require_timelike(const CurveJet& j, double t, const std::string& label) {
  const double q = speed_squared(j);
  if (!(q > 1e-12 * (1.0 + euclid_dot(j.d1, j.d1)))) {
    throw Error(ErrorCode::NotTimelike, "curve '" + label + "' is not timelike at parameter " +
                                            describe(t) + " (<d1,d1> = " + describe(-q) + ")");
  }
}

struct ArcTable {
  TimelikeCurve base;
  double u0 = 0.0;
  double du = 0.0;
  std::vector<double> s_nodes;

  double speed(double u) const { return std::sqrt(speed_squared(base.jet(u))); }

  double integrate(double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
      acc += kGaussWeights[i] * speed(mid + half * kGaussNodes[i]);
    }
    return acc * half;
  }

  std::size_t interval_of(double u) const {
    const auto n = s_nodes.size() - 1;
    const double k = std::floor((u - u0) / du);
    if (k < 0.0) return 0;
    if (k >= static_cast<double>(n)) return n - 1;
    return static_cast<std::size_t>(k);
  }

  double s_of_u(double u) const {
    const std::size_t k = interval_of(u);
    const double uk = u0 + static_cast<double>(k) * du;
    return s_nodes[k] + integrate(uk, u);
  }

  double u_of_s(double s) const {
    const auto it = std::upper_bound(s_nodes.begin(), s_nodes.end(), s);
    std::size_t k = it == s_nodes.begin() ? 0 : static_cast<std::size_t>(it - s_nodes.begin()) - 1;
    k = std::min(k, s_nodes.size() - 2);
    const double ds = s_nodes[k + 1] - s_nodes[k];
    double u = u0 + du * (static_cast<double>(k) + (s - s_nodes[k]) / ds);
    for (int iter = 0; iter < 60; ++iter) {
      const double step = (s_of_u(u) - s) / speed(u);
      u -= step;
      if (std::abs(step) <= 4e-16 * (1.0 + std::abs(u))) break;
    }
    return u;
  }
};

// Fornberg's recursion: weights[j][m] is the weight of node j for the m-th
// derivative at z of the interpolant through xs.
template <std::size_t N, std::size_t M>
std::array<std::array<double, M + 1>, N> fornberg_weights(double z, const std::array<double, N>& xs) {
  std::array<std::array<double, M + 1>, N> c{};
  double c1 = 1.0;
  double c4 = xs[0] - z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < N; ++i) {
    const std::size_t mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

double param_or(std::span<const double> p, std::size_t i, double fallback) {
  return i < p.size() ? p[i] : fallback;
}

void check_domain(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw Error(ErrorCode::ParamDomain,
                "curve domain must satisfy t_min < t_max, got [" + describe(lo) + ", " + describe(hi) + "]");
  }
}

}  // namespace

CurvePreset parse_curve_preset(std::string_view name) {
  if (name == "line" || name == "TimelikeLine") return CurvePreset::TimelikeLine;
  if (name == "hyperbola" || name == "TimelikeHyperbola") return CurvePreset::TimelikeHyperbola;
  if (name == "helix" || name == "TimelikeHelix") return CurvePreset::TimelikeHelix;
  if (name == "polynomial" || name == "PolynomialTimelike") return CurvePreset::PolynomialTimelike;
  throw Error(ErrorCode::ParamDomain, "unknown curve preset '" + std::string(name) + "'");
}

bool is_curve_preset_name(std::string_view name) {
  try {
    parse_curve_preset(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(std::max(n, 0)));
  if (n == 1) {
    g[0] = 0.5 * (lo + hi);
    return g;
  }
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

TimelikeCurve::TimelikeCurve(Evaluator eval, double t_min, double t_max, JetSource source,
                             std::string label, double margin)
    : eval_(std::move(eval)),
      t_min_(t_min),
      t_max_(t_max),
      margin_(margin >= 0.0 ? margin : 0.01 * (t_max - t_min)),
      source_(source),
      label_(std::move(label)) {
  check_domain(t_min_, t_max_);
  double worst = 0.0;
  for (double t : uniform_grid(t_min_, t_max_, kUnitSpeedGrid)) {
    const CurveJet j = jet(t);
    if (!(j.position.finite() && j.d1.finite() && j.d2.finite() && j.d3.finite())) {
      throw Error(ErrorCode::ParamDomain, "curve '" + label_ + "' has non-finite jet at " + describe(t));
    }
    require_timelike(j, t, label_);
    worst = std::max(worst, std::abs(mink_inner(j.d1, j.d1) + 1.0));
  }
  unit_speed_deviation_ = worst;
  unit_speed_ = worst <= kUnitSpeedTol;
}

CurveJet TimelikeCurve::jet(double t) const {
  if (!(t >= t_min_ - margin_ && t <= t_max_ + margin_)) {
    throw Error(ErrorCode::DomainViolation, "parameter " + describe(t) + " outside curve '" + label_ +
                                                "' domain [" + describe(t_min_) + ", " + describe(t_max_) + "]");
  }
  return eval_(t);
}

TimelikeCurve make_analytic_curve(CurvePreset preset, std::span<const double> params,
                                  bool require_unit_speed) {
  switch (preset) {
    case CurvePreset::TimelikeLine: {
      const double lo = param_or(params, 0, -1.0);
      const double hi = param_or(params, 1, 1.0);
      return TimelikeCurve([](double s) { return CurveJet{{s, 0, 0}, {1, 0, 0}, {}, {}}; }, lo, hi,
                           JetSource::Analytic, "line");
    }
    case CurvePreset::TimelikeHyperbola: {
      const double lo = param_or(params, 0, -1.0);
      const double hi = param_or(params, 1, 1.0);
      return TimelikeCurve(
          [](double s) {
            const double sh = std::sinh(s);
            const double ch = std::cosh(s);
            return CurveJet{{sh, ch, 0}, {ch, sh, 0}, {sh, ch, 0}, {ch, sh, 0}};
          },
          lo, hi, JetSource::Analytic, "hyperbola");
    }
    case CurvePreset::TimelikeHelix: {
      if (!params.empty() && params.size() != 3 && params.size() != 5) {
        throw Error(ErrorCode::ParamDomain, "helix takes params a,b,w[,t_min,t_max]");
      }
      // no params: a = sqrt 2, b = w = 1 (kappa 1, tau sqrt 2)
      const double a = param_or(params, 0, std::sqrt(2.0));
      const double b = param_or(params, 1, 1.0);
      const double w = param_or(params, 2, 1.0);
      const double lo = param_or(params, 3, 0.0);
      const double hi = param_or(params, 4, kTwoPi);
      const double q = a * a - b * b * w * w;
      if (!(q > 0.0)) {
        throw Error(ErrorCode::ParamDomain, "helix needs a^2 - b^2 w^2 > 0 to be timelike, got " + describe(q));
      }
      if (require_unit_speed && std::abs(q - 1.0) > 1e-12) {
        throw Error(ErrorCode::ParamDomain,
                    "unit-speed helix needs a^2 - b^2 w^2 = 1, got " + describe(q));
      }
      return TimelikeCurve(
          [a, b, w](double s) {
            const double c = std::cos(w * s);
            const double sn = std::sin(w * s);
            return CurveJet{{a * s, b * c, b * sn},
                            {a, -b * w * sn, b * w * c},
                            {0, -b * w * w * c, -b * w * w * sn},
                            {0, b * w * w * w * sn, -b * w * w * w * c}};
          },
          lo, hi, JetSource::Analytic, "helix");
    }
    case CurvePreset::PolynomialTimelike: {
      const double lo = param_or(params, 0, -0.5);
      const double hi = param_or(params, 1, 0.5);
      return TimelikeCurve(
          [](double u) {
            return CurveJet{{2 * u, u * u, u * u * u / 3}, {2, 2 * u, u * u}, {0, 2, 2 * u}, {0, 0, 2}};
          },
          lo, hi, JetSource::Analytic, "polynomial");
    }
  }
  throw Error(ErrorCode::ParamDomain, "unknown curve preset");
}

TimelikeCurve reparametrize_unit_speed(const TimelikeCurve& curve, int quad_steps) {
  if (quad_steps < 16) {
    throw Error(ErrorCode::ParamDomain, "quad_steps must be >= 16, got " + std::to_string(quad_steps));
  }
  auto table = std::make_shared<ArcTable>(ArcTable{curve, curve.t_min(), curve.span() / quad_steps, {}});
  table->s_nodes.resize(static_cast<std::size_t>(quad_steps) + 1);
  table->s_nodes[0] = curve.t_min();
  for (int k = 0; k < quad_steps; ++k) {
    const double a = table->u0 + k * table->du;
    const double b = k + 1 == quad_steps ? curve.t_max() : a + table->du;
    require_timelike(curve.jet(a), a, curve.label());
    for (double x : kGaussNodes) {
      const double u = 0.5 * (a + b) + 0.5 * (b - a) * x;
      require_timelike(curve.jet(u), u, curve.label());
    }
    table->s_nodes[static_cast<std::size_t>(k) + 1] = table->s_nodes[static_cast<std::size_t>(k)] + table->integrate(a, b);
  }
  require_timelike(curve.jet(curve.t_max()), curve.t_max(), curve.label());

  const double s_lo = table->s_nodes.front();
  const double s_hi = table->s_nodes.back();
  const double margin = std::min(table->s_nodes.front() - table->s_of_u(curve.t_min() - curve.margin()),
                                 table->s_of_u(curve.t_max() + curve.margin()) - s_hi);

  auto eval = [table](double s) {
    const double u = table->u_of_s(s);
    const CurveJet g = table->base.jet(u);
    const double v = std::sqrt(speed_squared(g));
    const double v_u = -mink_inner(g.d1, g.d2) / v;
    const double v_uu = (-mink_inner(g.d2, g.d2) - mink_inner(g.d1, g.d3) - v_u * v_u) / v;
    const double u1 = 1.0 / v;
    const double u2 = -v_u / (v * v * v);
    const double u3 = (3.0 * v_u * v_u - v * v_uu) / std::pow(v, 5);
    return CurveJet{g.position, u1 * g.d1, (u1 * u1) * g.d2 + u2 * g.d1,
                    (u1 * u1 * u1) * g.d3 + (3.0 * u1 * u2) * g.d2 + u3 * g.d1};
  };
  return TimelikeCurve(std::move(eval), s_lo, s_hi, curve.source(), curve.label() + "@arclength",
                       std::max(margin, 0.0));
}

CurveSamples parse_curve_csv(std::string_view text) {
  CurveSamples out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != "s,y1,y2,y3") fail("expected header 's,y1,y2,y3'");
      header_seen = true;
      continue;
    }
    if (line.empty()) {
      if (pos >= text.size()) break;
      fail("empty row");
    }
    std::array<double, 4> v{};
    std::size_t field = 0;
    std::size_t fpos = 0;
    while (true) {
      std::size_t comma = line.find(',', fpos);
      std::string_view tok = line.substr(fpos, comma == std::string_view::npos ? std::string_view::npos : comma - fpos);
      if (field >= 4) fail("expected 4 fields");
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v[field]);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || !std::isfinite(v[field])) {
        fail("field " + std::to_string(field + 1) + " is not a finite number: '" + std::string(tok) + "'");
      }
      ++field;
      if (comma == std::string_view::npos) break;
      fpos = comma + 1;
    }
    if (field != 4) fail("expected 4 fields, got " + std::to_string(field));
    if (!out.s.empty() && !(v[0] > out.s.back())) fail("s column must be strictly increasing");
    out.s.push_back(v[0]);
    out.points.push_back({v[1], v[2], v[3]});
  }
  if (!header_seen) {
    line_no = 1;
    fail("missing header");
  }
  if (out.s.size() < 7) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": need at least 7 sample rows, got " +
                                      std::to_string(out.s.size()));
  }
  return out;
}

CurveSamples read_curve_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_csv(buf.str());
}

TimelikeCurve make_sampled_curve(CurveSamples samples, std::string label) {
  if (samples.s.size() < 7 || samples.s.size() != samples.points.size()) {
    throw Error(ErrorCode::ParamDomain, "sampled curve needs >= 7 samples with matching positions");
  }
  auto data = std::make_shared<const CurveSamples>(std::move(samples));
  auto eval = [data](double s) {
    const auto& xs = data->s;
    const auto it = std::lower_bound(xs.begin(), xs.end(), s);
    const std::ptrdiff_t idx = it - xs.begin();
    const std::ptrdiff_t start =
        std::clamp<std::ptrdiff_t>(idx - 3, 0, static_cast<std::ptrdiff_t>(xs.size()) - 7);
    std::array<double, 7> nodes{};
    for (std::size_t i = 0; i < 7; ++i) nodes[i] = xs[static_cast<std::size_t>(start) + i];
    const auto w = fornberg_weights<7, 3>(s, nodes);
    CurveJet j;
    for (std::size_t i = 0; i < 7; ++i) {
      const MinkVector& p = data->points[static_cast<std::size_t>(start) + i];
      j.position += w[i][0] * p;
      j.d1 += w[i][1] * p;
      j.d2 += w[i][2] * p;
      j.d3 += w[i][3] * p;
    }
    return j;
  };
  const double lo = data->s.front();
  const double hi = data->s.back();
  return TimelikeCurve(std::move(eval), lo, hi, JetSource::SampledFiniteDifference, std::move(label));
}

FrenetJet frenet_jet(const TimelikeCurve& curve, double s, double kappa_floor) {
  if (!curve.unit_speed()) {
    throw Error(ErrorCode::ParamDomain, "curve '" + curve.label() +
                                            "' is not unit speed (deviation " +
                                            describe(curve.unit_speed_deviation()) + "); reparametrize first");
  }
  const CurveJet j = curve.jet(s);
  const double kappa = mink_norm(j.d2);
  if (!(kappa > kappa_floor)) {
    throw Error(ErrorCode::VanishingCurvature,
                "curvature " + describe(kappa) + " <= floor at parameter " + describe(s));
  }
  FrenetJet out;
  FrenetData& f = out.frame;
  f.t = j.d1;
  f.kappa = kappa;
  f.n = j.d2 / kappa;
  f.b = lorentz_cross(f.t, f.n);
  f.tau = mink_inner(j.d3, f.b) / kappa;
  out.dkappa = mink_inner(j.d2, j.d3) / kappa;
  out.dt = j.d2;
  out.dn = (j.d3 - out.dkappa * f.n) / kappa;
  // b = t ^ n and t' ^ n = kappa n ^ n = 0.
  out.db = lorentz_cross(f.t, out.dn);
  return out;
}

FrenetData frenet_frame(const TimelikeCurve& curve, double s, double kappa_floor) {
  return frenet_jet(curve, s, kappa_floor).frame;
}

std::vector<CurvatureSample> curvature_profile(const TimelikeCurve& curve, std::span<const double> grid,
                                               double kappa_floor) {
  std::vector<CurvatureSample> out;
  out.reserve(grid.size());
  for (double s : grid) {
    const FrenetJet fj = frenet_jet(curve, s, kappa_floor);
    out.push_back({s, fj.frame.kappa, fj.frame.tau, fj.dkappa});
  }
  return out;
}

}  // namespace ltube

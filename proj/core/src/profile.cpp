// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revsurf/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <stdexcept>

#include "revsurf/errors.hpp"
#include "revsurf/quadrature.hpp"
#include "revsurf/search.hpp"

namespace revsurf {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::string_view text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument("invalid " + what + " '" + std::string(text) +
                                "'");
  }
  return value;
}

Profile sin_family(std::string_view name, char sign, double beta) {
  const std::string text = "sin(s)*(1" + std::string(1, sign) +
                           format_double(beta) + "*sin(s)^2)";
  return Profile::from_expression(parse_expression(text), std::numbers::pi,
                                  std::string(name));
}

}  // namespace

Profile::Profile(std::variant<Expression, ClampedCubicSpline> source,
                 double length, std::string label)
    : source_(std::move(source)),
      base_length_(length),
      label_(std::move(label)) {}

Profile Profile::from_expression(Expression expr, double length,
                                 std::string label) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("profile length must be positive and finite");
  }
  return Profile(std::move(expr), length, std::move(label));
}

Profile Profile::from_samples(std::vector<double> knots,
                              std::vector<double> values, std::string label) {
  if (knots.size() != values.size()) {
    throw std::invalid_argument("knots and values differ in length");
  }
  if (knots.size() < 4) {
    throw std::invalid_argument("sampled profile needs at least 4 knots, got " +
                                std::to_string(knots.size()));
  }
  if (knots.front() != 0.0) {
    throw std::invalid_argument("first knot must be s = 0");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i]) || !std::isfinite(values[i])) {
      throw std::invalid_argument("non-finite sample at row " +
                                  std::to_string(i));
    }
    if (i > 0 && !(knots[i] > knots[i - 1])) {
      throw std::invalid_argument("knots must be strictly increasing (row " +
                                  std::to_string(i) + ")");
    }
    if (values[i] < 0.0) {
      throw std::invalid_argument("negative radius " + format_double(values[i]) +
                                  " at knot " + std::to_string(i));
    }
  }
  const double length = knots.back();
  return Profile(ClampedCubicSpline(std::move(knots), std::move(values), 1.0, -1.0),
                 length, std::move(label));
}

Jet3 Profile::jet(double s) const {
  const double t = s / scale_;
  const Jet3 f = std::visit(
      [t](const auto& src) {
        if constexpr (std::is_same_v<std::decay_t<decltype(src)>, Expression>) {
          return src.eval_jet3(t);
        } else {
          return src.jet(t);
        }
      },
      source_);
  return {scale_ * f.v, f.d1, f.d2 / scale_, f.d3 / (scale_ * scale_)};
}

double Profile::pole_third_derivative(Pole pole) const {
  const double s = pole == Pole::north ? 0.0 : length();
  const auto* spline = std::get_if<ClampedCubicSpline>(&source_);
  if (!spline) return jet(s).d3;

  const auto knots = spline->knots();
  const std::size_t n = knots.size();
  const double h = pole == Pole::north ? knots[1] - knots[0]
                                       : knots[n - 1] - knots[n - 2];
  const double base = pole == Pole::north ? 0.0 : base_length_;
  const double dir = pole == Pole::north ? 1.0 : -1.0;
  double f[4];
  for (int k = 0; k < 4; ++k) f[k] = spline->jet(base + dir * k * h).d2;
  const double d3 =
      dir * (-11.0 * f[0] + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * h);
  return d3 / (scale_ * scale_);
}

Profile Profile::rescaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("homothety factor must be positive");
  }
  Profile out = *this;
  out.scale_ *= lambda;
  return out;
}

ValidationReport validate(const Profile& p, double tol) {
  ValidationReport r;
  r.tol = tol;
  const double L = p.length();
  try {
    const Jet3 begin = p.jet(0.0);
    const Jet3 end = p.jet(L);
    r.a_begin_residual = std::fabs(begin.v);
    r.a_end_residual = std::fabs(end.v);
    r.slope_begin_residual = std::fabs(begin.d1 - 1.0);
    r.slope_end_residual = std::fabs(end.d1 + 1.0);
    r.a_begin_ok = r.a_begin_residual <= tol;
    r.a_end_ok = r.a_end_residual <= tol;
    r.slope_begin_ok = r.slope_begin_residual <= tol;
    r.slope_end_ok = r.slope_end_residual <= tol;

    constexpr std::size_t n = ValidationReport::kPositivityGrid;
    const double h = L / static_cast<double>(n);
    std::size_t best = 1;
    double best_value = p.a(h);
    for (std::size_t i = 2; i < n; ++i) {
      const double v = p.a(h * static_cast<double>(i));
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    r.interior_min = best_value;
    r.interior_min_at = h * static_cast<double>(best);
    // Refinement stays inside the interior grid so it never walks onto a pole.
    const double lo = h * static_cast<double>(std::max<std::size_t>(best - 1, 1));
    const double hi = h * static_cast<double>(std::min(best + 1, n - 1));
    if (hi > lo) {
      const Extremum refined = golden_section_maximize(
          [&](double s) { return -p.a(s); }, lo, hi, 1e-12 * L);
      if (-refined.value < r.interior_min) {
        r.interior_min = -refined.value;
        r.interior_min_at = refined.x;
      }
    }
    r.positive_ok = r.interior_min > 0.0;
  } catch (const DomainError& e) {
    r.evaluation_error = e.what();
    r.a_begin_ok = r.a_end_ok = r.slope_begin_ok = r.slope_end_ok =
        r.positive_ok = false;
  }
  return r;
}

double area(const Profile& p) {
  const double L = p.length();
  double scale = 0.0;
  for (int i = 0; i <= 64; ++i) scale = std::max(scale, std::fabs(p.a(L * i / 64.0)));
  QuadratureOptions opts;
  opts.abs_tol = 1e-10 * std::max(scale, 1e-300) * L;
  return 2.0 * std::numbers::pi *
         integrate([&](double s) { return p.a(s); }, 0.0, L, opts);
}

Profile rescale_to_area(const Profile& p, double target_area) {
  if (!(target_area > 0.0) || !std::isfinite(target_area)) {
    throw std::invalid_argument("target area must be positive");
  }
  return p.rescaled(std::sqrt(target_area / area(p)));
}

Profile make_preset(std::string_view name) {
  if (name == "sphere") {
    return Profile::from_expression(parse_expression("sin(s)"), std::numbers::pi,
                                    "sphere");
  }
  const auto colon = name.find(':');
  const std::string_view family = name.substr(0, colon);
  if (colon == std::string_view::npos || (family != "bump" && family != "dumbbell")) {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (try sphere, bump:<beta>, dumbbell:<beta>)");
  }
  const double beta = parse_double(name.substr(colon + 1), "preset parameter");
  if (family == "bump") {
    if (!(beta > -1.0)) {
      throw std::invalid_argument("bump:<beta> requires beta > -1");
    }
    return sin_family(name, '+', beta);
  }
  if (!(beta > 0.0 && beta < 1.0 / 3.0)) {
    throw std::invalid_argument("dumbbell:<beta> requires 0 < beta < 1/3");
  }
  return sin_family(name, '-', beta);
}

std::vector<PresetInfo> list_presets() {
  return {
      {"sphere", "sin(s), L = pi", "round unit sphere, K = 1"},
      {"bump:<beta>", "sin(s)*(1+beta*sin(s)^2), L = pi",
       "beta > -1; not embeddable for beta > 1/6"},
      {"dumbbell:<beta>", "sin(s)*(1-beta*sin(s)^2), L = pi",
       "0 < beta < 1/3; embeddable"},
  };
}

Profile read_profile_csv(std::istream& in, std::string label) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty profile CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "s,a") {
    throw std::runtime_error("profile CSV must start with header \"s,a\"");
  }
  std::vector<double> knots, values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw std::runtime_error("profile CSV row " + std::to_string(row) +
                               ": expected two columns");
    }
    try {
      knots.push_back(parse_double(std::string_view(line).substr(0, comma), "s"));
      values.push_back(parse_double(std::string_view(line).substr(comma + 1), "a"));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("profile CSV row " + std::to_string(row) + ": " +
                               e.what());
    }
  }
  return Profile::from_samples(std::move(knots), std::move(values),
                               std::move(label));
}

}  // namespace revsurf

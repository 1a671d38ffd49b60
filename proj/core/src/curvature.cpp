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

#include "revsurf/curvature.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "revsurf/quadrature.hpp"

namespace revsurf {

double gauss_curvature(const Profile& p, double s) {
  const double L = p.length();
  const double band = kPoleGuardFraction * L;
  const Jet3 j = p.jet(s);
  if (s >= band && s <= L - band) return -j.d2 / j.v;

  const Pole pole = s < band ? Pole::north : Pole::south;
  // Sampled profiles carry no usable a''' near the pole; use the
  // finite-difference pole estimate across the whole band.
  if (p.is_sampled()) return -p.pole_third_derivative(pole) / j.d1;

  // Linear blend from the one-step L'Hopital form at the pole to -a''/a at
  // the band edge, so K is continuous across the edge.
  const double limit = -j.d3 / j.d1;
  const double t = (pole == Pole::north ? s : L - s) / band;
  if (!(t > 0.0)) return limit;
  return t * (-j.d2 / j.v) + (1.0 - t) * limit;
}

CurvatureSample curvature_sample(const Profile& p, double s) {
  const Jet3 j = p.jet(s);
  return {s, j.v, j.d1, gauss_curvature(p, s)};
}

double disk_integral_closed(const Profile& p, double x, Pole pole) {
  const double slope = p.a_prime(x);
  return pole == Pole::north ? 1.0 - slope : 1.0 + slope;
}

double disk_integral_quadrature(const Profile& p, double x, Pole pole,
                                double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  QuadratureOptions opts;
  opts.abs_tol = tol;
  auto integrand = [&](double s) { return -p.jet(s).d2; };
  return pole == Pole::north ? integrate(integrand, 0.0, x, opts)
                             : integrate(integrand, x, p.length(), opts);
}

double total_curvature(const Profile& p) {
  return 2.0 * std::numbers::pi *
         disk_integral_quadrature(p, p.length(), Pole::north, 1e-10);
}

double latitude_geodesic_curvature_total(const Profile& p, double x) {
  if (!(x > 0.0 && x < p.length())) {
    throw std::invalid_argument("latitude must lie strictly between the poles");
  }
  return 2.0 * std::numbers::pi * p.a_prime(x);
}

std::vector<CurvatureSample> sample_curvature(const Profile& p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("need at least 2 curvature samples");
  const double L = p.length();
  std::vector<CurvatureSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = i + 1 == n ? L : L * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(curvature_sample(p, s));
  }
  return out;
}

void write_curvature_csv(std::ostream& out,
                         const std::vector<CurvatureSample>& samples) {
  out << "s,a,a_prime,K\n";
  char buf[128];
  for (const auto& c : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", c.s, c.a,
                  c.a_prime, c.K);
    out << buf;
  }
}

}  // namespace revsurf

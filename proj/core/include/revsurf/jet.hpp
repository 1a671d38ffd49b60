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

#pragma once

#include <cmath>

namespace revsurf {

/// Truncated Taylor data of order 3: value and first three derivatives of a
/// scalar function of one variable at a point.
struct Jet3 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static constexpr Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
  static constexpr Jet3 variable(double s) { return {s, 1.0, 0.0, 0.0}; }

  bool finite() const {
    return std::isfinite(v) && std::isfinite(d1) && std::isfinite(d2) &&
           std::isfinite(d3);
  }

  friend constexpr bool operator==(const Jet3&, const Jet3&) = default;
};

constexpr Jet3 operator+(const Jet3& f, const Jet3& g) {
  return {f.v + g.v, f.d1 + g.d1, f.d2 + g.d2, f.d3 + g.d3};
}

constexpr Jet3 operator-(const Jet3& f, const Jet3& g) {
  return {f.v - g.v, f.d1 - g.d1, f.d2 - g.d2, f.d3 - g.d3};
}

constexpr Jet3 operator-(const Jet3& f) { return {-f.v, -f.d1, -f.d2, -f.d3}; }

constexpr Jet3 operator*(double c, const Jet3& f) {
  return {c * f.v, c * f.d1, c * f.d2, c * f.d3};
}

// Leibniz rule to order 3.
constexpr Jet3 operator*(const Jet3& f, const Jet3& g) {
  return {f.v * g.v,
          f.d1 * g.v + f.v * g.d1,
          f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2,
          f.d3 * g.v + 3.0 * f.d2 * g.d1 + 3.0 * f.d1 * g.d2 + f.v * g.d3};
}

/// Chain rule (Faa di Bruno to order 3): composes an outer function whose
/// derivatives at u.v are (p0, p1, p2, p3) with the inner jet u.
constexpr Jet3 compose(const Jet3& u, double p0, double p1, double p2,
                       double p3) {
  return {p0, p1 * u.d1, p2 * u.d1 * u.d1 + p1 * u.d2,
          p3 * u.d1 * u.d1 * u.d1 + 3.0 * p2 * u.d1 * u.d2 + p1 * u.d3};
}

/// 1/g; caller guarantees g.v != 0.
inline Jet3 reciprocal(const Jet3& g) {
  const double r = 1.0 / g.v;
  const double r2 = r * r;
  return compose(g, r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2);
}

/// f/g; caller guarantees g.v != 0.
inline Jet3 operator/(const Jet3& f, const Jet3& g) { return f * reciprocal(g); }

inline Jet3 sin(const Jet3& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, s, c, -s, -c);
}

inline Jet3 cos(const Jet3& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, c, -s, -c, s);
}

inline Jet3 tan(const Jet3& u) {
  const double t = std::tan(u.v);
  const double sec2 = 1.0 + t * t;
  return compose(u, t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t));
}

inline Jet3 exp(const Jet3& u) {
  const double e = std::exp(u.v);
  return compose(u, e, e, e, e);
}

/// Natural log; caller guarantees u.v > 0.
inline Jet3 log(const Jet3& u) {
  const double r = 1.0 / u.v;
  return compose(u, std::log(u.v), r, -r * r, 2.0 * r * r * r);
}

/// Square root; caller guarantees u.v > 0.
inline Jet3 sqrt(const Jet3& u) {
  const double q = std::sqrt(u.v);
  const double r = 1.0 / u.v;
  return compose(u, q, 0.5 / q, -0.25 * r / q, 0.375 * r * r / q);
}

/// |u|, taking the branch of the sign of u.v (the + branch at zero).
inline Jet3 abs(const Jet3& u) { return std::signbit(u.v) ? -u : u; }

/// u^p for a constant exponent. Falling-factorial coefficients that vanish
/// (integer p) suppress the corresponding power, so 0^2 has finite jets.
inline Jet3 pow(const Jet3& u, double p) {
  double coeff[4] = {1.0, p, p * (p - 1.0), p * (p - 1.0) * (p - 2.0)};
  double out[4];
  for (int k = 0; k < 4; ++k) {
    out[k] = coeff[k] == 0.0 ? 0.0 : coeff[k] * std::pow(u.v, p - k);
  }
  return compose(u, out[0], out[1], out[2], out[3]);
}

}  // namespace revsurf

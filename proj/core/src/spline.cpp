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

#include "revsurf/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace revsurf {

ClampedCubicSpline::ClampedCubicSpline(std::vector<double> knots,
                                       std::vector<double> values,
                                       double slope_begin, double slope_end)
    : knots_(std::move(knots)), values_(std::move(values)) {
  const std::size_t n = knots_.size();
  if (n < 2 || values_.size() != n) {
    throw std::invalid_argument("spline needs matching knots and values");
  }
  // Tridiagonal system for the knot second derivatives, solved by the
  // Thomas algorithm.
  std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
  auto h = [&](std::size_t i) { return knots_[i + 1] - knots_[i]; };
  auto slope = [&](std::size_t i) { return (values_[i + 1] - values_[i]) / h(i); };

  diag[0] = h(0) / 3.0;
  sup[0] = h(0) / 6.0;
  rhs[0] = slope(0) - slope_begin;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sub[i] = h(i - 1) / 6.0;
    diag[i] = (h(i - 1) + h(i)) / 3.0;
    sup[i] = h(i) / 6.0;
    rhs[i] = slope(i) - slope(i - 1);
  }
  sub[n - 1] = h(n - 2) / 6.0;
  diag[n - 1] = h(n - 2) / 3.0;
  rhs[n - 1] = slope_end - slope(n - 2);

  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  second_.assign(n, 0.0);
  second_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    second_[i] = (rhs[i] - sup[i] * second_[i + 1]) / diag[i];
  }
}

Jet3 ClampedCubicSpline::jet(double x) const {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  i = std::min(i, knots_.size() - 2);

  const double h = knots_[i + 1] - knots_[i];
  const double a = (knots_[i + 1] - x) / h;
  const double b = (x - knots_[i]) / h;
  const double m0 = second_[i], m1 = second_[i + 1];
  const double y0 = values_[i], y1 = values_[i + 1];

  Jet3 out;
  out.v = a * y0 + b * y1 + ((a * a * a - a) * m0 + (b * b * b - b) * m1) * h * h / 6.0;
  out.d1 = (y1 - y0) / h - (3.0 * a * a - 1.0) / 6.0 * h * m0 +
           (3.0 * b * b - 1.0) / 6.0 * h * m1;
  out.d2 = a * m0 + b * m1;
  out.d3 = (m1 - m0) / h;
  return out;
}

}  // namespace revsurf

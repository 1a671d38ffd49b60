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

#include <span>
#include <vector>

#include "revsurf/jet.hpp"

namespace revsurf {

/// C^2 cubic interpolating spline with prescribed end slopes.
class ClampedCubicSpline {
 public:
  /// `knots` strictly increasing, same size as `values`, at least 2 entries.
  ClampedCubicSpline(std::vector<double> knots, std::vector<double> values,
                     double slope_begin, double slope_end);

  /// Value and derivatives of the piecewise cubic. The third derivative is
  /// the constant of the containing segment. Outside the knot range the end
  /// segments are extended.
  Jet3 jet(double x) const;

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> second_;  // second derivative at each knot
};

}  // namespace revsurf

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

// Profile function a(s) of a rotation-invariant metric on the sphere,
//
//   g = ds^2 + a(s)^2 dtheta^2,   s in [0, L],
//
// where s is arclength along a meridian from the north pole (s = 0) to the
// south pole (s = L). Smooth closure at the poles requires
// a(0) = a(L) = 0, a'(0) = 1, a'(L) = -1 and a > 0 in between.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revsurf/expression.hpp"
#include "revsurf/jet.hpp"
#include "revsurf/spline.hpp"

namespace revsurf {

enum class Pole { north, south };

class Profile {
 public:
  /// Wraps a closed-form a(s) on [0, length]. Does not validate.
  /// Throws std::invalid_argument if length <= 0.
  static Profile from_expression(Expression expr, double length,
                                 std::string label = {});

  /// Clamped cubic spline through (knots, values) with end slopes +1 and
  /// -1. Requires >= 4 strictly increasing knots starting at 0 and
  /// non-negative finite values; throws std::invalid_argument otherwise.
  static Profile from_samples(std::vector<double> knots,
                              std::vector<double> values,
                              std::string label = {});

  double length() const { return base_length_ * scale_; }
  const std::string& label() const { return label_; }
  bool is_sampled() const {
    return std::holds_alternative<ClampedCubicSpline>(source_);
  }
  /// The closed-form source, if any (before any homothety).
  const Expression* expression() const {
    return std::get_if<Expression>(&source_);
  }
  /// Accumulated homothety factor relative to the source.
  double scale() const { return scale_; }

  /// (a, a', a'', a''') at s. Exact jets for closed form; spline
  /// derivatives for sampled profiles.
  Jet3 jet(double s) const;
  double a(double s) const { return jet(s).v; }
  double a_prime(double s) const { return jet(s).d1; }

  /// a''' at a pole. Closed form: the jet value. Sampled: one-sided
  /// 4-point difference of the spline's a'' with the end knot spacing,
  /// accurate to O(h).
  double pole_third_derivative(Pole pole) const;

  /// Homothety s -> lambda*s, a -> lambda*a: the result has length
  /// lambda*L and profile lambda*a(s/lambda). a' is unchanged pointwise.
  Profile rescaled(double lambda) const;

 private:
  Profile(std::variant<Expression, ClampedCubicSpline> source, double length,
          std::string label);

  std::variant<Expression, ClampedCubicSpline> source_;
  double base_length_;
  double scale_ = 1.0;
  std::string label_;
};

struct ValidationReport {
  static constexpr std::size_t kPositivityGrid = 2048;

  double tol = 0.0;
  double a_begin_residual = 0.0;        // |a(0)|
  double a_end_residual = 0.0;          // |a(L)|
  double slope_begin_residual = 0.0;    // |a'(0) - 1|
  double slope_end_residual = 0.0;      // |a'(L) + 1|
  double interior_min = 0.0;
  double interior_min_at = 0.0;

  bool a_begin_ok = false;
  bool a_end_ok = false;
  bool slope_begin_ok = false;
  bool slope_end_ok = false;
  bool positive_ok = false;

  /// Set when evaluating the profile raised a DomainError.
  std::optional<std::string> evaluation_error;

  bool passed() const {
    return !evaluation_error && a_begin_ok && a_end_ok && slope_begin_ok &&
           slope_end_ok && positive_ok;
  }
};

/// Checks the closure conditions at `tol` and interior positivity on a
/// uniform grid of kPositivityGrid cells, refined by golden-section search
/// around the smallest interior grid value. Never throws for tol > 0.
ValidationReport validate(const Profile& p, double tol);

/// 2*pi * integral of a over [0, L]. Throws QuadratureError on
/// non-convergence.
double area(const Profile& p);

/// Homothetic copy with area `target_area`. Throws std::invalid_argument if
/// target_area <= 0.
Profile rescale_to_area(const Profile& p, double target_area);

/// Built-ins: "sphere", "bump:<beta>" = sin(s)(1 + beta sin^2 s) and
/// "dumbbell:<beta>" = sin(s)(1 - beta sin^2 s) with 0 < beta < 1/3, all on
/// [0, pi]. Throws std::invalid_argument for unknown names or bad beta.
Profile make_preset(std::string_view name);

struct PresetInfo {
  std::string name;
  std::string formula;
  std::string note;
};
std::vector<PresetInfo> list_presets();

/// Reads a sampled profile in CSV form: header "s,a", one knot per row.
/// Throws std::runtime_error on malformed input.
Profile read_profile_csv(std::istream& in, std::string label = {});

}  // namespace revsurf

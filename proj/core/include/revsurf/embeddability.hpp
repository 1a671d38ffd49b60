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

// Isometric embeddability of a rotation-invariant sphere in R^3.
//
// The surface embeds (C^1) iff |a'| <= 1 on [0, L]. Two equivalent
// restatements are checked alongside it:
//   disk      every pole-centred disk has non-negative total curvature;
//   latitude  every latitude circle has |total geodesic curvature| <= 2pi.
// Two one-sided tests complete the report:
//   pole obstruction   K < 0 at a pole rules out an embedding;
//   nonneg curvature   K >= 0 everywhere guarantees one.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revsurf/profile.hpp"

namespace revsurf {

enum class Criterion {
  derivative,
  disk,
  latitude,
  pole_obstruction,
  nonneg_curvature,
};

enum class Verdict { embeddable, not_embeddable, inconclusive };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);

struct CriterionResult {
  Criterion criterion = Criterion::derivative;
  Verdict verdict = Verdict::inconclusive;
  /// Location and value of the extremal (or offending) quantity:
  ///   derivative        argmax |a'|, sup |a'|
  ///   disk              worst disk radius x, min disk integral
  ///   latitude          argmax, max |total k_g|
  ///   pole_obstruction  pole position, K there (the smaller of the two)
  ///   nonneg_curvature  argmin K, min K
  double witness_s = 0.0;
  double witness_value = 0.0;
  /// Signed distance to the threshold in the criterion's natural units;
  /// positive means the embeddable side.
  double margin = 0.0;
  /// Set when sup |a'| falls in (1, 1 + tol].
  bool boundary_case = false;
};

struct EmbeddabilityReport {
  Verdict verdict = Verdict::inconclusive;
  double sup_a_prime = 0.0;
  double sup_a_prime_at = 0.0;
  std::vector<CriterionResult> criteria;
  double pole_curvature_north = 0.0;
  double pole_curvature_south = 0.0;
  std::size_t grid_n = 0;
  double tol = 0.0;

  const CriterionResult& result(Criterion c) const;
};

inline constexpr std::size_t kDefaultGrid = 4096;
inline constexpr double kDefaultTol = 1e-9;

/// sup |a'| over [0, L]: uniform grid of grid_n points, then golden-section
/// refinement to width 1e-12 L around both the largest and the smallest a'.
/// grid_n must be >= 64.
CriterionResult check_derivative(const Profile& p, std::size_t grid_n = kDefaultGrid,
                                 double tol = kDefaultTol);

/// min over x of 1 - a'(x) and 1 + a'(x).
CriterionResult check_disk(const Profile& p, std::size_t grid_n = kDefaultGrid,
                           double tol = kDefaultTol);

/// max over interior latitudes of |2pi a'(x)|.
CriterionResult check_latitude(const Profile& p, std::size_t grid_n = kDefaultGrid,
                               double tol = kDefaultTol);

CriterionResult check_pole_obstruction(const Profile& p, double tol = kDefaultTol);

CriterionResult check_nonneg_curvature(const Profile& p,
                                       std::size_t grid_n = kDefaultGrid,
                                       double tol = kDefaultTol);

/// Runs all five checks concurrently and cross-checks them. Throws
/// InconsistencyError if derivative, disk and latitude disagree or if a
/// one-sided test contradicts the derivative verdict.
EmbeddabilityReport full_report(const Profile& p, std::size_t grid_n = kDefaultGrid,
                                double tol = kDefaultTol);

/// JSON rendering with fields verdict, sup_a_prime {value, at_s}, criteria
/// [{name, verdict, witness_s, witness_value, margin}], pole_curvature
/// {np, sp}, grid_n, tol.
std::string report_to_json(const EmbeddabilityReport& report, int indent = 2);

}  // namespace revsurf

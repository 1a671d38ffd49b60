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

#include "revsurf/embeddability.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "revsurf/curvature.hpp"
#include "revsurf/errors.hpp"
#include "revsurf/search.hpp"

namespace revsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_grid(std::size_t grid_n) {
  if (grid_n < 64) throw std::invalid_argument("grid_n must be at least 64");
}

double refine_width(const Profile& p) { return 1e-12 * p.length(); }

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::derivative:
      return "derivative";
    case Criterion::disk:
      return "disk";
    case Criterion::latitude:
      return "latitude";
    case Criterion::pole_obstruction:
      return "pole_obstruction";
    case Criterion::nonneg_curvature:
      return "nonneg_curvature";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::embeddable:
      return "embeddable";
    case Verdict::not_embeddable:
      return "not_embeddable";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const CriterionResult& EmbeddabilityReport::result(Criterion c) const {
  for (const auto& r : criteria) {
    if (r.criterion == c) return r;
  }
  throw std::out_of_range("criterion missing from report");
}

CriterionResult check_derivative(const Profile& p, std::size_t grid_n,
                                 double tol) {
  require_grid(grid_n);
  const double L = p.length();
  auto slope = [&](double s) { return p.a_prime(s); };
  const Extremum hi = grid_maximize(slope, 0.0, L, grid_n, refine_width(p));
  const Extremum lo = grid_minimize(slope, 0.0, L, grid_n, refine_width(p));

  CriterionResult r;
  r.criterion = Criterion::derivative;
  if (hi.value >= -lo.value) {
    r.witness_s = hi.x;
    r.witness_value = std::fabs(hi.value);
  } else {
    r.witness_s = lo.x;
    r.witness_value = std::fabs(lo.value);
  }
  r.margin = 1.0 - r.witness_value;
  r.verdict = r.witness_value <= 1.0 + tol ? Verdict::embeddable
                                           : Verdict::not_embeddable;
  r.boundary_case = r.verdict == Verdict::embeddable && r.witness_value > 1.0;
  return r;
}

CriterionResult check_disk(const Profile& p, std::size_t grid_n, double tol) {
  require_grid(grid_n);
  const double L = p.length();
  const Extremum north = grid_minimize(
      [&](double x) { return disk_integral_closed(p, x, Pole::north); }, 0.0, L,
      grid_n, refine_width(p));
  const Extremum south = grid_minimize(
      [&](double x) { return disk_integral_closed(p, x, Pole::south); }, 0.0, L,
      grid_n, refine_width(p));

  const Extremum& worst = south.value < north.value ? south : north;
  CriterionResult r;
  r.criterion = Criterion::disk;
  r.witness_s = worst.x;
  r.witness_value = worst.value;
  r.margin = worst.value;
  r.verdict = worst.value >= -tol ? Verdict::embeddable : Verdict::not_embeddable;
  return r;
}

CriterionResult check_latitude(const Profile& p, std::size_t grid_n, double tol) {
  require_grid(grid_n);
  const double L = p.length();
  auto total_kg = [&](double x) { return latitude_geodesic_curvature_total(p, x); };
  const Extremum hi =
      grid_maximize(total_kg, 0.0, L, grid_n, refine_width(p), /*open=*/true);
  const Extremum lo =
      grid_minimize(total_kg, 0.0, L, grid_n, refine_width(p), /*open=*/true);

  CriterionResult r;
  r.criterion = Criterion::latitude;
  if (hi.value >= -lo.value) {
    r.witness_s = hi.x;
    r.witness_value = std::fabs(hi.value);
  } else {
    r.witness_s = lo.x;
    r.witness_value = std::fabs(lo.value);
  }
  r.margin = (kTwoPi - r.witness_value) / kTwoPi;
  r.verdict = r.witness_value <= kTwoPi * (1.0 + tol) ? Verdict::embeddable
                                                      : Verdict::not_embeddable;
  return r;
}

CriterionResult check_pole_obstruction(const Profile& p, double tol) {
  const double north = gauss_curvature(p, 0.0);
  const double south = gauss_curvature(p, p.length());
  CriterionResult r;
  r.criterion = Criterion::pole_obstruction;
  if (south < north) {
    r.witness_s = p.length();
    r.witness_value = south;
  } else {
    r.witness_s = 0.0;
    r.witness_value = north;
  }
  r.margin = r.witness_value;
  r.verdict = r.witness_value < -tol ? Verdict::not_embeddable : Verdict::inconclusive;
  return r;
}

CriterionResult check_nonneg_curvature(const Profile& p, std::size_t grid_n,
                                       double tol) {
  require_grid(grid_n);
  const Extremum low = grid_minimize([&](double s) { return gauss_curvature(p, s); },
                                     0.0, p.length(), grid_n, refine_width(p));
  CriterionResult r;
  r.criterion = Criterion::nonneg_curvature;
  r.witness_s = low.x;
  r.witness_value = low.value;
  r.margin = low.value;
  r.verdict = low.value >= -tol ? Verdict::embeddable : Verdict::inconclusive;
  return r;
}

EmbeddabilityReport full_report(const Profile& p, std::size_t grid_n, double tol) {
  require_grid(grid_n);
  auto derivative = std::async(std::launch::async, [&] { return check_derivative(p, grid_n, tol); });
  auto disk = std::async(std::launch::async, [&] { return check_disk(p, grid_n, tol); });
  auto latitude = std::async(std::launch::async, [&] { return check_latitude(p, grid_n, tol); });
  auto pole = std::async(std::launch::async, [&] { return check_pole_obstruction(p, tol); });
  auto nonneg = std::async(std::launch::async, [&] { return check_nonneg_curvature(p, grid_n, tol); });

  EmbeddabilityReport report;
  report.criteria = {derivative.get(), disk.get(), latitude.get(), pole.get(),
                     nonneg.get()};
  report.grid_n = grid_n;
  report.tol = tol;

  const CriterionResult& d = report.criteria[0];
  report.verdict = d.verdict;
  report.sup_a_prime = d.witness_value;
  report.sup_a_prime_at = d.witness_s;
  report.pole_curvature_north = gauss_curvature(p, 0.0);
  report.pole_curvature_south = gauss_curvature(p, p.length());

  std::ostringstream problems;
  for (std::size_t i = 1; i <= 2; ++i) {
    const CriterionResult& c = report.criteria[i];
    if (c.verdict != d.verdict) {
      problems << to_string(c.criterion) << " says " << to_string(c.verdict)
               << " but derivative says " << to_string(d.verdict) << "; ";
    }
  }
  if (report.criteria[3].verdict == Verdict::not_embeddable &&
      d.verdict == Verdict::embeddable) {
    problems << "pole obstruction contradicts an embeddable derivative verdict; ";
  }
  if (report.criteria[4].verdict == Verdict::embeddable &&
      d.verdict == Verdict::not_embeddable) {
    problems << "non-negative curvature contradicts a non-embeddable derivative verdict; ";
  }
  if (!problems.str().empty()) {
    throw InconsistencyError("embeddability criteria disagree: " + problems.str());
  }
  return report;
}

std::string report_to_json(const EmbeddabilityReport& report, int indent) {
  nlohmann::ordered_json j;
  j["verdict"] = report.verdict == Verdict::embeddable ? "embeddable" : "not_embeddable";
  j["sup_a_prime"] = {{"value", report.sup_a_prime}, {"at_s", report.sup_a_prime_at}};
  auto criteria = nlohmann::ordered_json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"name", std::string(to_string(c.criterion))},
                        {"verdict", std::string(to_string(c.verdict))},
                        {"witness_s", c.witness_s},
                        {"witness_value", c.witness_value},
                        {"margin", c.margin}});
  }
  j["criteria"] = std::move(criteria);
  j["pole_curvature"] = {{"np", report.pole_curvature_north},
                         {"sp", report.pole_curvature_south}};
  j["grid_n"] = report.grid_n;
  j["tol"] = report.tol;
  return j.dump(indent);
}

}  // namespace revsurf

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

#include "revsurf/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "revsurf/errors.hpp"
#include "revsurf/quadrature.hpp"

namespace revsurf {

namespace {

constexpr std::size_t kScanGrid = 4096;
constexpr double kCellTol = 1e-14;

double radicand(double slope) { return (1.0 - slope) * (1.0 + slope); }

// Locates the most negative radicand on [lo, hi] and the contiguous run of
// grid points around it that are below the clamp, then throws.
[[noreturn]] void throw_not_embeddable(const Profile& p, double lo, double hi) {
  const std::size_t n = kScanGrid;
  std::vector<double> r(n + 1);
  std::size_t worst = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    r[i] = radicand(p.a_prime(lo + (hi - lo) * static_cast<double>(i) / n));
    if (r[i] < r[worst]) worst = i;
  }
  std::size_t first = worst, last = worst;
  while (first > 0 && r[first - 1] < -kRadicandClamp) --first;
  while (last < n && r[last + 1] < -kRadicandClamp) ++last;
  auto at = [&](std::size_t i) { return lo + (hi - lo) * static_cast<double>(i) / n; };
  const double s = at(worst);
  throw NotEmbeddableError(s, p.a_prime(s), at(first), at(last));
}

void scan_radicand(const Profile& p, double lo, double hi) {
  if (hi < lo) std::swap(lo, hi);
  for (std::size_t i = 0; i <= kScanGrid; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) / kScanGrid;
    if (radicand(p.a_prime(s)) < -kRadicandClamp) throw_not_embeddable(p, lo, hi);
  }
}

double integrate_height(const Profile& p, double a, double b, double tol) {
  QuadratureOptions opts;
  opts.abs_tol = tol;
  // sqrt-type behaviour where the radicand touches zero at an endpoint.
  if (radicand(p.a_prime(a)) <= kRadicandClamp ||
      radicand(p.a_prime(b)) <= kRadicandClamp) {
    opts.min_depth = 8;
  }
  return integrate([&](double t) { return height_integrand(p, t); }, a, b, opts);
}

}  // namespace

double height_integrand(const Profile& p, double s) {
  const double r = radicand(p.a_prime(s));
  if (r < -kRadicandClamp) {
    const double L = p.length();
    const double w = 1e-3 * L;
    throw_not_embeddable(p, std::max(0.0, s - w), std::min(L, s + w));
  }
  return std::sqrt(std::max(0.0, r));
}

EmbeddingMap::EmbeddingMap(Profile profile, double c)
    : profile_(std::move(profile)), c_(c) {
  const double L = profile_.length();
  if (!(c >= 0.0 && c <= L)) {
    throw std::invalid_argument("basepoint c must lie in [0, L]");
  }
  scan_radicand(profile_, 0.0, L);
  cell_ = L / static_cast<double>(kTableCells);
  cumulative_.assign(kTableCells + 1, 0.0);
  for (std::size_t i = 0; i < kTableCells; ++i) {
    const double a = cell_ * static_cast<double>(i);
    const double b = i + 1 == kTableCells ? L : cell_ * static_cast<double>(i + 1);
    cumulative_[i + 1] = cumulative_[i] + integrate_height(profile_, a, b, kCellTol);
  }
  offset_ = 0.0;
  offset_ = height_from_origin(c_);
}

double EmbeddingMap::height_from_origin(double s) const {
  const double L = profile_.length();
  s = std::clamp(s, 0.0, L);
  std::size_t i = static_cast<std::size_t>(s / cell_);
  i = std::min(i, kTableCells - 1);
  const double knot = cell_ * static_cast<double>(i);
  if (s == knot) return cumulative_[i];
  // Nearest table knot, so partial integrals stay within half a cell.
  if (s - knot > 0.5 * cell_) {
    const double next = i + 1 == kTableCells ? L : cell_ * static_cast<double>(i + 1);
    return cumulative_[i + 1] - integrate_height(profile_, s, next, kCellTol);
  }
  return cumulative_[i] + integrate_height(profile_, knot, s, kCellTol);
}

double EmbeddingMap::psi3(double s) const { return height_from_origin(s) - offset_; }

Vec3 EmbeddingMap::point(double s, double theta) const {
  const double a = profile_.a(s);
  return {a * std::cos(theta), a * std::sin(theta), psi3(s)};
}

double psi3(const Profile& p, double s, double c) {
  scan_radicand(p, c, s);
  QuadratureOptions opts;
  opts.abs_tol = 1e-13 * std::max(1.0, p.length());
  opts.min_depth = 8;
  return integrate([&](double t) { return height_integrand(p, t); }, c, s, opts);
}

Vec3 embed_point(const Profile& p, double s, double theta, double c) {
  const double a = p.a(s);
  return {a * std::cos(theta), a * std::sin(theta), psi3(p, s, c)};
}

MeshTopology analyze_topology(const Mesh& mesh) {
  MeshTopology t;
  t.vertices = mesh.vertices.size();
  t.faces = mesh.triangles.size();
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> undirected;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t u = tri[k], v = tri[(k + 1) % 3];
      ++directed[{u, v}];
      ++undirected[{std::min(u, v), std::max(u, v)}];
    }
  }
  t.edges = undirected.size();
  t.watertight = std::all_of(undirected.begin(), undirected.end(),
                             [](const auto& e) { return e.second == 2; });
  t.oriented = std::all_of(directed.begin(), directed.end(),
                           [](const auto& e) { return e.second == 1; });
  return t;
}

Mesh generate_mesh(const EmbeddingMap& map, std::size_t n_s, std::size_t n_theta) {
  if (n_s < 3 || n_theta < 3) {
    throw std::invalid_argument("mesh needs n_s >= 3 and n_theta >= 3");
  }
  const double L = map.profile().length();
  Mesh mesh;
  mesh.n_s = n_s;
  mesh.n_theta = n_theta;
  mesh.vertices.reserve((n_s - 1) * n_theta + 2);

  mesh.vertices.push_back({0.0, 0.0, map.psi3(0.0)});
  for (std::size_t i = 1; i < n_s; ++i) {
    const double s = L * static_cast<double>(i) / static_cast<double>(n_s);
    const double a = map.profile().a(s);
    const double z = map.psi3(s);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
      mesh.vertices.push_back({a * std::cos(theta), a * std::sin(theta), z});
    }
  }
  mesh.vertices.push_back({0.0, 0.0, map.psi3(L)});

  const auto south = static_cast<std::uint32_t>(mesh.vertices.size() - 1);
  auto ring = [&](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(1 + (i - 1) * n_theta + j % n_theta);
  };
  // Winding (theta edge) x (s edge) points away from the axis.
  for (std::size_t j = 0; j < n_theta; ++j) {
    mesh.triangles.push_back({0, ring(1, j + 1), ring(1, j)});
  }
  for (std::size_t i = 1; i + 1 < n_s; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const auto a = ring(i, j), b = ring(i, j + 1);
      const auto c = ring(i + 1, j), d = ring(i + 1, j + 1);
      mesh.triangles.push_back({a, b, c});
      mesh.triangles.push_back({b, d, c});
    }
  }
  for (std::size_t j = 0; j < n_theta; ++j) {
    mesh.triangles.push_back({ring(n_s - 1, j), ring(n_s - 1, j + 1), south});
  }

  const MeshTopology topo = analyze_topology(mesh);
  if (!topo.watertight || !topo.oriented || topo.euler_characteristic() != 2) {
    throw Error("internal error: generated mesh is not a closed oriented sphere");
  }
  return mesh;
}

Mesh generate_mesh(const Profile& p, std::size_t n_s, std::size_t n_theta, double c) {
  return generate_mesh(EmbeddingMap(p, c), n_s, n_theta);
}

MetricCheck verify_induced_metric(const EmbeddingMap& map, std::size_t n_s,
                                  std::size_t n_theta, double h) {
  if (n_s == 0 || n_theta == 0 || !(h > 0.0)) {
    throw std::invalid_argument("verification grid and step must be positive");
  }
  const Profile& p = map.profile();
  const double L = p.length();
  MetricCheck out;
  out.guard_band = kMetricGuardFraction * L;
  out.step = h;

  std::vector<double> touch;
  for (std::size_t i = 0; i <= kScanGrid; ++i) {
    const double s = L * static_cast<double>(i) / kScanGrid;
    if (std::fabs(p.a_prime(s)) >= 1.0 - 1e-7) touch.push_back(s);
  }
  auto guarded = [&](double s) {
    if (s < out.guard_band || s > L - out.guard_band) return true;
    return std::any_of(touch.begin(), touch.end(), [&](double t) {
      return std::fabs(s - t) < out.guard_band;
    });
  };

  for (std::size_t i = 0; i < n_s; ++i) {
    const double s = L * (static_cast<double>(i) + 0.5) / static_cast<double>(n_s);
    if (guarded(s)) {
      out.samples_skipped += n_theta;
      continue;
    }
    const double a = p.a(s);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
      const Vec3 sp = map.point(s + h, theta), sm = map.point(s - h, theta);
      const Vec3 tp = map.point(s, theta + h), tm = map.point(s, theta - h);
      Vec3 ds{}, dt{};
      for (int k = 0; k < 3; ++k) {
        ds[k] = (sp[k] - sm[k]) / (2.0 * h);
        dt[k] = (tp[k] - tm[k]) / (2.0 * h);
      }
      const double E = ds[0] * ds[0] + ds[1] * ds[1] + ds[2] * ds[2];
      const double F = ds[0] * dt[0] + ds[1] * dt[1] + ds[2] * dt[2];
      const double G = dt[0] * dt[0] + dt[1] * dt[1] + dt[2] * dt[2];
      out.max_E_error = std::max(out.max_E_error, std::fabs(E - 1.0));
      out.max_F_error = std::max(out.max_F_error, std::fabs(F));
      out.max_G_error = std::max(out.max_G_error, std::fabs(G - a * a));
      ++out.samples_used;
    }
  }
  return out;
}

MetricCheck verify_induced_metric(const Profile& p, double c, std::size_t n_s,
                                  std::size_t n_theta, double h) {
  return verify_induced_metric(EmbeddingMap(p, c), n_s, n_theta, h);
}

}  // namespace revsurf

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

// Explicit isometric embedding of an embeddable profile:
//
//   x = a(s) cos(theta),  y = a(s) sin(theta),
//   z = psi3(s) = int_c^s sqrt(1 - a'(t)^2) dt.
//
// psi3 is real exactly when |a'| <= 1 on the integration range.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "revsurf/profile.hpp"

namespace revsurf {

using Vec3 = std::array<double, 3>;

/// Radicand values in (-kRadicandClamp, 0) are rounding noise and are
/// clamped to 0; anything lower is a genuine failure to embed.
inline constexpr double kRadicandClamp = 1e-9;

/// Width of the verification guard bands, as a fraction of L.
inline constexpr double kMetricGuardFraction = 1e-3;

/// The embedding with a cached cumulative table of psi3. Construction scans
/// the whole profile and throws NotEmbeddableError if 1 - a'^2 drops below
/// -kRadicandClamp anywhere. Immutable afterwards.
class EmbeddingMap {
 public:
  static constexpr std::size_t kTableCells = 1024;

  explicit EmbeddingMap(Profile profile, double c = 0.0);

  const Profile& profile() const { return profile_; }
  double basepoint() const { return c_; }

  /// Height function; psi3(c) == 0 and psi3 is non-decreasing. s is clamped
  /// to [0, L].
  double psi3(double s) const;

  Vec3 point(double s, double theta) const;

 private:
  double height_from_origin(double s) const;

  Profile profile_;
  double c_;
  double cell_;
  std::vector<double> cumulative_;  // int_0^{i*cell} sqrt(1 - a'^2)
  double offset_;                   // height_from_origin(c)
};

/// sqrt(max(0, 1 - a'(s)^2)), or NotEmbeddableError below the clamp.
double height_integrand(const Profile& p, double s);

/// Standalone psi3 by direct adaptive quadrature over [c, s]. Throws
/// NotEmbeddableError if the radicand is genuinely negative on that range.
double psi3(const Profile& p, double s, double c = 0.0);

/// (a(s) cos theta, a(s) sin theta, psi3(s)).
Vec3 embed_point(const Profile& p, double s, double theta, double c = 0.0);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::size_t n_s = 0;
  std::size_t n_theta = 0;
};

struct MeshTopology {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  bool watertight = false;  // every edge shared by exactly two triangles
  bool oriented = false;    // every directed edge used at most once

  long euler_characteristic() const {
    return static_cast<long>(vertices) - static_cast<long>(edges) +
           static_cast<long>(faces);
  }
};

MeshTopology analyze_topology(const Mesh& mesh);

/// Uniform s-rings at s_i = i*L/n_s (0 < i < n_s), n_theta meridians, and
/// a vertex at each pole: (n_s - 1)*n_theta + 2 vertices and
/// 2*n_theta*(n_s - 1) outward-oriented triangles. n_s, n_theta >= 3.
Mesh generate_mesh(const EmbeddingMap& map, std::size_t n_s, std::size_t n_theta);
Mesh generate_mesh(const Profile& p, std::size_t n_s, std::size_t n_theta,
                   double c = 0.0);

struct MetricCheck {
  double max_E_error = 0.0;  // |E - 1|
  double max_F_error = 0.0;  // |F|
  double max_G_error = 0.0;  // |G - a^2|
  double guard_band = 0.0;   // absolute width around poles and |a'| = 1 points
  double step = 0.0;
  std::size_t samples_used = 0;
  std::size_t samples_skipped = 0;
};

/// Compares the first fundamental form of the embedding, by central
/// differences with step h, with (1, 0, a^2) on an n_s x n_theta grid of
/// cell centres in s. Samples within kMetricGuardFraction*L of a pole or of
/// a point where |a'| reaches 1 are skipped.
MetricCheck verify_induced_metric(const EmbeddingMap& map, std::size_t n_s,
                                  std::size_t n_theta, double h);
MetricCheck verify_induced_metric(const Profile& p, double c, std::size_t n_s,
                                  std::size_t n_theta, double h);

}  // namespace revsurf

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

// Intrinsic curvature quantities of g = ds^2 + a(s)^2 dtheta^2.
//
// Gauss curvature is K = -a''/a and the area density is a, so the curvature
// integral over the disk {s <= x} about the north pole reduces to
//
//   (1 / 2pi) * int_disk K = int_0^x -a''(s) ds = 1 - a'(x),
//
// and over the disk {s >= x} about the south pole to 1 + a'(x). The two
// add up to 2 (total curvature 4pi). The latitude circle s = x, oriented as
// the boundary of the north disk, has total geodesic curvature 2pi a'(x).

#include <iosfwd>
#include <vector>

#include "revsurf/profile.hpp"

namespace revsurf {

/// Half-width of the band around each pole, as a fraction of L, inside
/// which K is taken from the L'Hopital form -a'''/a'.
inline constexpr double kPoleGuardFraction = 1e-4;

struct CurvatureSample {
  double s = 0.0;
  double a = 0.0;        // also the area density sqrt(g)
  double a_prime = 0.0;
  double K = 0.0;
};

/// K(s). Outside the pole bands: -a''/a. At a pole: -a'''/a', i.e. -a'''(0)
/// (north) and a'''(L) (south). Inside a band the two forms are blended
/// linearly in the distance to the pole; sampled profiles use the pole value
/// across the whole band. The pole limit is only meaningful when
/// a''(pole) = 0, as it is for metrics smooth at the poles.
double gauss_curvature(const Profile& p, double s);

CurvatureSample curvature_sample(const Profile& p, double s);

/// Closed form of (1/2pi) * int_disk K: 1 - a'(x) for the north disk
/// [0, x], 1 + a'(x) for the south disk [x, L].
double disk_integral_closed(const Profile& p, double x, Pole pole);

/// The same quantity by adaptive quadrature of K * a = -a'' over the disk's
/// meridian interval, to absolute tolerance `tol`.
double disk_integral_quadrature(const Profile& p, double x, Pole pole,
                                double tol = 1e-10);

/// int_M K, by quadrature. 4pi for every valid profile.
double total_curvature(const Profile& p);

/// Total geodesic curvature 2pi a'(x) of the latitude circle s = x,
/// oriented as the boundary of the north disk. Requires 0 < x < L.
double latitude_geodesic_curvature_total(const Profile& p, double x);

/// `n` >= 2 uniform samples on [0, L], pole limits at the ends.
std::vector<CurvatureSample> sample_curvature(const Profile& p, std::size_t n);

/// CSV with header "s,a,a_prime,K".
void write_curvature_csv(std::ostream& out,
                         const std::vector<CurvatureSample>& samples);

}  // namespace revsurf

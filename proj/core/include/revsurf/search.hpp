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

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace revsurf {

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of a unimodal `f` on [lo, hi]; stops
/// once the bracket is narrower than `width`. Only interior points of the
/// bracket are evaluated.
template <class F>
Extremum golden_section_maximize(F&& f, double lo, double hi, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int iter = 0; iter < 200 && (hi - lo) > width; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
}

/// Samples `f` at n uniform points of [lo, hi], then refines around the best
/// sample by golden-section search over its two neighbouring cells. Returns
/// the better of the sample and the refinement. With `open` set the two
/// endpoints are never evaluated (the refinement may still approach them).
template <class F>
Extremum grid_maximize(F&& f, double lo, double hi, std::size_t n,
                       double width, bool open = false) {
  n = std::max<std::size_t>(n, open ? 3 : 2);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  auto point = [&](std::size_t i) {
    return i + 1 == n ? hi : lo + step * static_cast<double>(i);
  };
  const std::size_t first = open ? 1 : 0;
  const std::size_t last = open ? n - 2 : n - 1;
  Extremum best{point(first), f(point(first))};
  std::size_t best_i = first;
  for (std::size_t i = first + 1; i <= last; ++i) {
    const double x = point(i);
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  const double a = point(best_i == 0 ? 0 : best_i - 1);
  const double b = point(std::min(best_i + 1, n - 1));
  const Extremum refined = golden_section_maximize(f, a, b, width);
  return refined.value > best.value ? refined : best;
}

/// Minimizing counterpart of grid_maximize.
template <class F>
Extremum grid_minimize(F&& f, double lo, double hi, std::size_t n,
                       double width, bool open = false) {
  auto neg = [&](double x) { return -f(x); };
  Extremum e = grid_maximize(neg, lo, hi, n, width, open);
  e.value = -e.value;
  return e;
}

}  // namespace revsurf

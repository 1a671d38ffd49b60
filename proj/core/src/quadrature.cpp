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

#include "revsurf/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "revsurf/errors.hpp"

namespace revsurf {

namespace {

std::atomic<std::size_t> g_default_budget{1'000'000};

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<double(double)>& f,
                  const QuadratureOptions& options)
      : f_(f), options_(options) {
    budget_ = options.budget ? options.budget : default_quadrature_budget();
  }

  double run(double a, double b) {
    const double fa = eval(a), fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, options_.abs_tol, 0);
  }

 private:
  double eval(double x) {
    if (++evaluations_ > budget_) {
      throw QuadratureError("adaptive quadrature exceeded its budget of " +
                            std::to_string(budget_) + " evaluations");
    }
    return f_(x);
  }

  double refine(double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    if (!(a < lm && lm < m && m < rm && rm < b)) return whole;
    const double flm = eval(lm), frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= options_.max_depth ||
        (depth >= options_.min_depth && std::fabs(delta) <= 15.0 * tol)) {
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  const std::function<double(double)>& f_;
  const QuadratureOptions& options_;
  std::size_t budget_ = 0;
  std::size_t evaluations_ = 0;
};

}  // namespace

std::size_t default_quadrature_budget() { return g_default_budget.load(); }

void set_default_quadrature_budget(std::size_t budget) {
  g_default_budget.store(budget);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, options);
  AdaptiveSimpson simpson(f, options);
  return simpson.run(a, b);
}

}  // namespace revsurf

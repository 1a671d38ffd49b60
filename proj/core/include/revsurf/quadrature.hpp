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

#include <cstddef>
#include <functional>

namespace revsurf {

/// Evaluation budget used when QuadratureOptions::budget is 0.
/// Starts at 10^6; the CLI overrides it from REVSURF_QUAD_BUDGET.
std::size_t default_quadrature_budget();
void set_default_quadrature_budget(std::size_t budget);

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t budget = 0;  // 0 = default_quadrature_budget()
  int min_depth = 3;       // bisections forced before accepting a panel
  int max_depth = 50;
};

/// Adaptive Simpson quadrature with interval bisection and Richardson
/// correction. Throws QuadratureError once the budget is spent. Reversed
/// limits (b < a) give the negated integral.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

}  // namespace revsurf

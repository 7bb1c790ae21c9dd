// Copyright 2026 The evcbounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVC_NUMERICS_HPP_
#define EVC_NUMERICS_HPP_

#include <functional>
#include <span>

#include "evc/errors.hpp"

namespace evc {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  int max_depth = 60;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
};

// Adaptive quadrature of f on [a,b]. Panels never straddle a breakpoint;
// refinement splits the worst panel at its midpoint until the summed error
// estimate drops below cfg.abs_tol. Throws ToleranceNotReached once a panel
// would exceed cfg.max_depth splits.
IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, std::span<const double> breakpoints,
                            const QuadratureConfig& cfg = {});

struct RootResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

// Bracketed root finding (Brent with bisection fallback, <= 200 iterations).
// Requires f(lo)*f(hi) <= 0, else throws NoSignChange.
RootResult find_root(const std::function<double(double)>& f, double lo,
                     double hi, double xtol = 1e-13);

}  // namespace evc

#endif  // EVC_NUMERICS_HPP_

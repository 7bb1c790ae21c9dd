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

#include "evc/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace evc {
namespace {

// Gauss-Legendre nodes/weights on [-1,1] via Newton iteration on P_n.
template <int N>
struct GaussRule {
  std::array<double, N> node{};
  std::array<double, N> weight{};

  GaussRule() {
    for (int i = 0; i < N; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= N; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = N * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  double apply(const std::function<double(double)>& f, double a,
               double b) const {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += weight[i] * f(mid + half * node[i]);
    return half * sum;
  }
};

const GaussRule<12>& high_rule() {
  static const GaussRule<12> rule;
  return rule;
}
const GaussRule<6>& low_rule() {
  static const GaussRule<6> rule;
  return rule;
}

struct Panel {
  double a, b;
  double value;
  double error;
  int depth;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b,
                 int depth) {
  double hi = high_rule().apply(f, a, b);
  double lo = low_rule().apply(f, a, b);
  return {a, b, hi, std::fabs(hi - lo), depth};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, std::span<const double> breakpoints,
                            const QuadratureConfig& cfg) {
  if (!(a <= b)) throw DomainError("integrate requires a <= b");
  if (a == b) return {0.0, 0.0, 0};

  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> queue;
  double value = 0.0, error = 0.0;
  int panels = 0;
  for (size_t i = 1; i < cuts.size(); ++i) {
    Panel p = eval_panel(f, cuts[i - 1], cuts[i], 0);
    value += p.value;
    error += p.error;
    ++panels;
    queue.push(p);
  }
  while (error > cfg.abs_tol && !queue.empty()) {
    Panel worst = queue.top();
    queue.pop();
    if (worst.depth >= cfg.max_depth) {
      throw ToleranceNotReached(
          "integrate: max subdivision depth reached before tolerance");
    }
    value -= worst.value;
    error -= worst.error;
    double mid = 0.5 * (worst.a + worst.b);
    for (Panel half : {eval_panel(f, worst.a, mid, worst.depth + 1),
                       eval_panel(f, mid, worst.b, worst.depth + 1)}) {
      value += half.value;
      error += half.error;
      ++panels;
      queue.push(half);
    }
  }
  return {value, error, panels};
}

RootResult find_root(const std::function<double(double)>& f, double lo,
                     double hi, double xtol) {
  double fa = f(lo), fb = f(hi);
  if (fa == 0.0) return {lo, lo, lo, 0};
  if (fb == 0.0) return {hi, hi, hi, 0};
  if (fa * fb > 0.0) {
    throw NoSignChange("find_root: no sign change over bracket");
  }

  // Brent-Dekker with bisection fallback.
  double a = lo, b = hi, c = lo, fc = fa;
  double d = b - a, e = d;
  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol = 2.0 * std::numeric_limits<double>::epsilon() *
                     std::fabs(b) + 0.5 * xtol;
    double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) break;
    if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
      d = e = m;  // bisection
    } else {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
  }
  double blo = std::min(b, c), bhi = std::max(b, c);
  return {b, blo, bhi, iterations};
}

}  // namespace evc

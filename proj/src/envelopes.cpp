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

#include "evc/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "evc/numerics.hpp"

namespace evc {
namespace {

constexpr double kWitnessTol = 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

PickandsFunction independence() {
  return PickandsFunction::from_knots({{0.0, 1.0}, {1.0, 1.0}});
}

PickandsFunction comonotone_tent() {
  return PickandsFunction::from_knots({{0.0, 1.0}, {0.5, 0.5}, {1.0, 1.0}});
}

PickandsFunction p_member(MeasureKind measure, double v, double yp) {
  return PickandsFunction::make_family(
      {FamilyTag::P, h_map(measure, v, yp), yp});
}

// Ordinate maximizing P_{h_v(y'),y'}(t) over y' in [phi_inv(v),1].
double peak_ordinate(MeasureKind measure, double v, double t) {
  if (measure == MeasureKind::KendallTau) {
    return t <= 0.5 ? phi2_inv(v) : 1.0;
  }
  double left = rho_mid_left(v), right = rho_mid_right(v);
  if (t < left) return phi1_inv(v);
  if (t > right) return 1.0;
  return y_star(v, t);
}

Witness certify(MeasureKind measure, double v, double t, double y,
                PickandsFunction fn) {
  double achieved_value = measure_value(measure, fn);
  double achieved_height = fn(t);
  if (std::fabs(achieved_value - v) > kWitnessTol ||
      std::fabs(achieved_height - y) > kWitnessTol) {
    throw WitnessNotFound("witness certificates out of tolerance");
  }
  return {std::move(fn), measure, v, t, y, achieved_value, achieved_height};
}

// Solves T_{x,apex}(t) = y for the apex abscissa x; case (a) of the
// sharpness construction. Returns nothing when y is above the T sweep.
std::optional<PickandsFunction> t_family_witness(double apex_height, double t,
                                                 double y) {
  const double yc = apex_height;
  if (y >= 1.0 - 1e-15) {
    // only attainable at the endpoints
    if (t > 1e-15 && t < 1.0 - 1e-15) return std::nullopt;
    return PickandsFunction::make_family({FamilyTag::T, 0.5, yc});
  }
  if (std::fabs(y - yc) <= 1e-15 && t >= 1.0 - yc && t <= yc) {
    return PickandsFunction::make_family({FamilyTag::T, t, yc});
  }
  // apex right of t: y = 1 - (1-yc) t / x
  {
    double x = (1.0 - yc) * t / (1.0 - y);
    x = std::clamp(x, std::max(t, 1.0 - yc), yc);
    if (x >= 1.0 - yc && x <= yc && x > 0.0) {
      PickandsFunction fn =
          PickandsFunction::make_family({FamilyTag::T, x, yc});
      if (std::fabs(fn(t) - y) <= kWitnessTol) return fn;
    }
  }
  // apex left of t: y = 1 - (1-yc)(1-t) / (1-x)
  {
    double x = 1.0 - (1.0 - yc) * (1.0 - t) / (1.0 - y);
    x = std::clamp(x, 1.0 - yc, std::min(t, yc));
    if (x >= 1.0 - yc && x <= yc && x < 1.0) {
      PickandsFunction fn =
          PickandsFunction::make_family({FamilyTag::T, x, yc});
      if (std::fabs(fn(t) - y) <= kWitnessTol) return fn;
    }
  }
  return std::nullopt;
}

}  // namespace

double lower_bound(MeasureKind measure, double v, double t) {
  require(v >= 0.0 && v <= 1.0, "lower_bound: v must lie in [0,1]");
  require(t >= 0.0 && t <= 1.0, "lower_bound: t must lie in [0,1]");
  double y0 = phi_inv(measure, v);
  return std::max({t, 1.0 - t, y0});
}

double rho_mid_left(double rho0) { return (3.0 - rho0) / (6.0 + rho0); }
double rho_mid_right(double rho0) { return (3.0 + 2.0 * rho0) / (6.0 + rho0); }

double upper_envelope_rho(double rho0, double t) {
  require(rho0 >= 0.0 && rho0 <= 1.0,
          "upper_envelope_rho: target must lie in [0,1]");
  require(t >= 0.0 && t <= 1.0, "upper_envelope_rho: t must lie in [0,1]");
  if (rho0 == 0.0) return 1.0;
  double yc = phi1_inv(rho0);
  if (t < rho_mid_left(rho0)) {
    return 1.0 - t * (1.0 - yc) / yc;  // P_{0,yc}
  }
  if (t > rho_mid_right(rho0)) {
    return 1.0 - (1.0 - t) * (1.0 - yc) / yc;  // P_{1-yc,1}
  }
  double rad = 6.0 - 2.0 * rho0 - (15.0 + rho0) * t * (1.0 - t);
  if (rad < 0.0) rad = 0.0;  // rho0=1 at t=1/2, rounding only
  return (9.0 - rho0 + 4.0 * std::sqrt(rad)) / (15.0 + rho0);
}

double upper_envelope_tau(double tau0, double t) {
  require(tau0 >= 0.0 && tau0 <= 1.0,
          "upper_envelope_tau: target must lie in [0,1]");
  require(t >= 0.0 && t <= 1.0, "upper_envelope_tau: t must lie in [0,1]");
  return t <= 0.5 ? 1.0 - tau0 * t : 1.0 - tau0 * (1.0 - t);
}

bool Region::contains(double t, double y, double tol) const {
  if (t < 0.0 || t > 1.0 || y < 0.0 || y > 1.0) return false;
  return y >= lower(t) - tol && y <= upper(t) + tol;
}

bool region_contains(const Region& region, double t, double y) {
  return region.contains(t, y);
}

double g_fun(double rho0, double t, double y) {
  require(rho0 > 0.0 && rho0 < 1.0, "g_fun: target must lie in (0,1)");
  require(y >= phi1_inv(rho0) - 1e-12 && y <= 1.0 + 1e-12,
          "g_fun: y must lie in [phi1_inv(rho0),1]");
  require(t >= 0.0 && t <= 1.0, "g_fun: t must lie in [0,1]");
  double num = 3.0 * t + rho0 * t + 3.0 * y - 3.0 * rho0 * y -
               18.0 * t * y + 2.0 * rho0 * t * y + 3.0 * y * y -
               3.0 * rho0 * y * y + 15.0 * t * y * y + rho0 * t * y * y;
  double den = 6.0 - 2.0 * rho0 - 15.0 * y - rho0 * y + 15.0 * y * y +
               rho0 * y * y;
  return num / den;
}

double g_deriv(double rho0, double t, double y) {
  require(rho0 > 0.0 && rho0 < 1.0, "g_deriv: target must lie in (0,1)");
  require(y >= phi1_inv(rho0) - 1e-12 && y <= 1.0 + 1e-12,
          "g_deriv: y must lie in [phi1_inv(rho0),1]");
  double num = 3.0 * t + rho0 * t + 3.0 * y - 3.0 * rho0 * y -
               18.0 * t * y + 2.0 * rho0 * t * y + 3.0 * y * y -
               3.0 * rho0 * y * y + 15.0 * t * y * y + rho0 * t * y * y;
  double den = 6.0 - 2.0 * rho0 - 15.0 * y - rho0 * y + 15.0 * y * y +
               rho0 * y * y;
  double dnum = 3.0 - 3.0 * rho0 - 18.0 * t + 2.0 * rho0 * t + 6.0 * y -
                6.0 * rho0 * y + 30.0 * t * y + 2.0 * rho0 * t * y;
  double dden = -15.0 - rho0 + 30.0 * y + 2.0 * rho0 * y;
  return dnum / den - dden * num / (den * den);
}

double y_star(double rho0, double t) {
  require(rho0 > 0.0 && rho0 < 1.0, "y_star: target must lie in (0,1)");
  require(t >= rho_mid_left(rho0) - 1e-12 &&
              t <= rho_mid_right(rho0) + 1e-12,
          "y_star: t outside the middle interval of the envelope");
  double rad = 6.0 - 2.0 * rho0 - (15.0 + rho0) * t * (1.0 - t);
  if (rad < 0.0) rad = 0.0;
  double num = -6.0 + 2.0 * rho0 - 15.0 * t - rho0 * t -
               6.0 * std::sqrt(rad);
  double den = -30.0 - 2.0 * rho0 + 15.0 * t + rho0 * t;
  return num / den;
}

double t_of_y(double rho0, double y0) {
  require(rho0 > 0.0 && rho0 < 1.0, "t_of_y: target must lie in (0,1)");
  require(y0 >= phi1_inv(rho0) - 1e-12 && y0 <= 1.0 + 1e-12,
          "t_of_y: y0 must lie in [phi1_inv(rho0),1]");
  double num = 2.0 * (-3.0 + rho0 - 6.0 * y0 + 2.0 * rho0 * y0 +
                      15.0 * y0 * y0 + rho0 * y0 * y0);
  double den = -21.0 + rho0 + 30.0 * y0 + 2.0 * rho0 * y0 +
               15.0 * y0 * y0 + rho0 * y0 * y0;
  return num / den;
}

std::vector<BoundaryRow> boundary_curves(MeasureKind measure, double v,
                                         int n) {
  require(n >= 2, "boundary_curves: n must be at least 2");
  require(v >= 0.0 && v <= 1.0, "boundary_curves: v must lie in [0,1]");
  Region region{measure, v};
  std::vector<BoundaryRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / (n - 1);
    rows.push_back({t, region.lower(t), region.upper(t)});
  }
  return rows;
}

Witness witness(MeasureKind measure, double v, double t, double y) {
  require(v >= 0.0 && v <= 1.0, "witness: v must lie in [0,1]");
  Region region{measure, v};
  if (!region.contains(t, y)) {
    throw PointOutsideRegion("witness: point outside the region");
  }

  if (v == 0.0) {
    // Only A == 1 attains value 0; interior heights of Omega_0 are reached
    // in the limit only.
    if (std::fabs(y - 1.0) <= kWitnessTol) {
      return certify(measure, v, t, y, independence());
    }
    throw PointOutsideRegion(
        "witness: v=0 is attained only on the upper edge y=1");
  }
  if (v == 1.0) {
    return certify(measure, v, t, y, comonotone_tent());
  }

  const double yc = phi_inv(measure, v);
  if (auto fn = t_family_witness(yc, t, y)) {
    return certify(measure, v, t, y, std::move(*fn));
  }

  // Case (b): root on the P-family parameter. The peak ordinate splits the
  // interval so a sign change is guaranteed on [yc, y_peak].
  double y_peak = peak_ordinate(measure, v, t);
  auto f = [&](double yp) { return p_member(measure, v, yp)(t) - y; };
  double f_peak = f(y_peak);
  if (f_peak < -kWitnessTol) {
    throw PointOutsideRegion("witness: point above the upper envelope");
  }
  if (f_peak <= 0.0) {
    return certify(measure, v, t, y, p_member(measure, v, y_peak));
  }
  double lo = yc, f_lo = f(lo);
  if (f_lo >= 0.0) {
    // y at or below the sweep start; the member at yc already passes high
    // enough and the T sweep missed only by tolerance.
    return certify(measure, v, t, y, p_member(measure, v, lo));
  }
  // 64-panel sign-change scan, then a bracketed root.
  double hi = y_peak, f_hi = f_peak;
  for (int i = 1; i <= 64; ++i) {
    double yp = yc + (y_peak - yc) * i / 64.0;
    double fv = f(yp);
    if (fv >= 0.0) {
      hi = yp;
      f_hi = fv;
      break;
    }
    lo = yp;
    f_lo = fv;
  }
  if (f_lo * f_hi > 0.0) {
    throw WitnessNotFound("witness: sign-change scan failed");
  }
  double root = find_root(f, lo, hi, 1e-13).root;
  return certify(measure, v, t, y, p_member(measure, v, root));
}

PickandsFunction calibrate_to_value(MeasureKind measure, double v,
                                    const PickandsFunction& seed) {
  require(v >= 0.0 && v <= 1.0, "calibrate_to_value: v must lie in [0,1]");
  double val = measure_value(measure, seed);
  if (std::fabs(val - v) <= 1e-12) return seed;
  if (val > v) {
    // blend toward independence (measure decreases with theta -> 0)
    PickandsFunction one = independence();
    auto f = [&](double theta) {
      return measure_value(measure, convex_mix(theta, seed, one)) - v;
    };
    double theta = find_root(f, 0.0, 1.0, 1e-14).root;
    return convex_mix(theta, seed, one);
  }
  // blend toward the tent M (measure increases with theta -> 1)
  PickandsFunction m = comonotone_tent();
  auto f = [&](double theta) {
    return measure_value(measure, convex_mix(theta, m, seed)) - v;
  };
  if (f(1.0) <= 0.0) return m;  // v=1 up to rounding
  double theta = find_root(f, 0.0, 1.0, 1e-14).root;
  return convex_mix(theta, m, seed);
}

}  // namespace evc

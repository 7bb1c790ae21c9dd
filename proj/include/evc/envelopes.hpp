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

#ifndef EVC_ENVELOPES_HPP_
#define EVC_ENVELOPES_HPP_

#include <vector>

#include "evc/measures.hpp"
#include "evc/pickands.hpp"

namespace evc {

// Sharp lower bound: L_{phi_inv(v)}(t) = max(t, 1-t, phi_inv(v)).
double lower_bound(MeasureKind measure, double v, double t);

// Sharp upper envelope of the graphs of all A with rho(C_A) = rho0:
// P_{0,phi1_inv(rho0)} / closed-form S_{rho0} / P_{1-phi1_inv(rho0),1}
// on the three pieces; identically 1 at rho0 = 0.
double upper_envelope_rho(double rho0, double t);

// Tau analogue: the tent through (1/2, 1 - tau0/2).
double upper_envelope_tau(double tau0, double t);

// The band between lower bound and upper envelope at a fixed target value.
struct Region {
  MeasureKind measure;
  double v;

  double lower(double t) const { return lower_bound(measure, v, t); }
  double upper(double t) const {
    return measure == MeasureKind::SpearmanRho ? upper_envelope_rho(v, t)
                                               : upper_envelope_tau(v, t);
  }
  bool contains(double t, double y, double tol = 1e-12) const;
};

bool region_contains(const Region& region, double t, double y);

// A Pickands function certified to attain the target value and pass
// through the requested point.
struct Witness {
  PickandsFunction function;
  MeasureKind measure;
  double v;
  double t;
  double y;
  double achieved_value;
  double achieved_height;
};

// Constructs a witness for an in-region point via the T-family sweep
// (linear solve for the apex) or, above it, a bracketed root on the
// P-family parameter. Throws PointOutsideRegion / WitnessNotFound.
Witness witness(MeasureKind measure, double v, double t, double y);

// Auxiliary functions for the rho envelope. g_fun(rho0,t,y) is the height of
// P_{h_rho0(y),y} at t as a rational expression in y; y_star maximizes it.
double g_fun(double rho0, double t, double y);
double g_deriv(double rho0, double t, double y);
double y_star(double rho0, double t);
double t_of_y(double rho0, double y0);

// Endpoints of the middle (curved) piece of the rho envelope.
double rho_mid_left(double rho0);
double rho_mid_right(double rho0);

struct BoundaryRow {
  double t;
  double lower;
  double upper;
};

// n equally spaced abscissae with both bounds (data behind the region
// figures). Throws DomainError for n < 2 or v outside [0,1].
std::vector<BoundaryRow> boundary_curves(MeasureKind measure, double v, int n);

// Homotopy calibration: moves seed toward A==1 (or toward the tent M when
// the seed's value is below v) until the measure equals v to 1e-12.
PickandsFunction calibrate_to_value(MeasureKind measure, double v,
                                    const PickandsFunction& seed);

}  // namespace evc

#endif  // EVC_ENVELOPES_HPP_

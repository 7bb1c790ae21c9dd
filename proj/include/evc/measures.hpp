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

#ifndef EVC_MEASURES_HPP_
#define EVC_MEASURES_HPP_

#include "evc/numerics.hpp"
#include "evc/pickands.hpp"

namespace evc {

enum class MeasureKind { SpearmanRho, KendallTau };

// Spearman's rho of C_A: -3 + 12 * integral of 1/(1+A)^2. Each linear
// segment is integrated in closed form, so the result is exact up to
// rounding for knot representations.
double rho(const PickandsFunction& a, const QuadratureConfig& cfg = {});

// Kendall's tau of C_A in Stieltjes form: dA' puts mass
// (slope after - slope before) >= 0 at each interior knot, so
// tau = sum_k t_k (1-t_k) / A(t_k) * dm_k.
double tau(const PickandsFunction& a, const QuadratureConfig& cfg = {});

// Independent cross-check of tau: adaptive quadrature of
// 1 - (1+(1-t)A'/A)(1-t A'/A) with panels aligned to the knots.
double tau_quadrature_oracle(const PickandsFunction& a,
                             const QuadratureConfig& cfg = {});

// Closed forms for tags T, L, P; throws NoClosedForm for Z, W.
double rho_family_closed(const FamilySpec& spec);
double tau_family_closed(const FamilySpec& spec);

double measure_value(MeasureKind kind, const PickandsFunction& a);

// Strictly decreasing bijections [1/2,1] -> [0,1] and their inverses.
// phi: value along the T family, psi: along the L family.
double phi1(double y);
double phi1_inv(double r);
double psi1(double y);
double psi1_inv(double r);
double phi2(double y);
double phi2_inv(double t);
double psi2(double y);
double psi2_inv(double t);

// phi_inv for the given measure kind.
double phi_inv(MeasureKind kind, double v);

// The unique P-family kink abscissa keeping rho (tau) at the target:
// rho(C_{P_{h_rho0(y),y}}) = rho0 for every y in [phi1_inv(rho0), 1].
// Defined for target < 1 only.
double h_rho(double rho0, double y);
double h_rho_deriv(double rho0, double y);
double h_rho_inv(double rho0, double x);
double h_tau(double tau0, double y);
double h_tau_deriv(double tau0, double y);
double h_tau_inv(double tau0, double x);

double h_map(MeasureKind kind, double v, double y);

}  // namespace evc

#endif  // EVC_MEASURES_HPP_

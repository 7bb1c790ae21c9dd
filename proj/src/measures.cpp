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

#include "evc/measures.hpp"

#include <cmath>
#include <vector>

namespace evc {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

double rho(const PickandsFunction& a, const QuadratureConfig& /*cfg*/) {
  const std::vector<Knot>& ks = a.knots();
  double integral = 0.0;
  for (size_t i = 1; i < ks.size(); ++i) {
    double dt = ks[i].t - ks[i - 1].t;
    double a0 = ks[i - 1].a, a1 = ks[i].a;
    // antiderivative of 1/(1+A)^2 on a linear segment reduces to
    // dt/((1+a0)(1+a1)); exact for flat segments and free of the
    // cancellation the -1/(m(1+A)) form suffers near them
    integral += dt / ((1.0 + a0) * (1.0 + a1));
  }
  return -3.0 + 12.0 * integral;
}

double tau(const PickandsFunction& a, const QuadratureConfig& /*cfg*/) {
  const std::vector<Knot>& ks = a.knots();
  double sum = 0.0;
  for (size_t i = 1; i + 1 < ks.size(); ++i) {
    double m_before =
        (ks[i].a - ks[i - 1].a) / (ks[i].t - ks[i - 1].t);
    double m_after =
        (ks[i + 1].a - ks[i].a) / (ks[i + 1].t - ks[i].t);
    double mass = m_after - m_before;
    sum += ks[i].t * (1.0 - ks[i].t) / ks[i].a * mass;
  }
  return sum;
}

double tau_quadrature_oracle(const PickandsFunction& a,
                             const QuadratureConfig& cfg) {
  const std::vector<Knot>& ks = a.knots();
  std::vector<double> cuts;
  cuts.reserve(ks.size());
  for (const Knot& k : ks) cuts.push_back(k.t);

  double integral = 0.0;
  // A' is constant per segment; integrate panel-wise so the integrand is
  // smooth everywhere the quadrature sees it.
  for (size_t i = 1; i < ks.size(); ++i) {
    double m = (ks[i].a - ks[i - 1].a) / (ks[i].t - ks[i - 1].t);
    auto integrand = [&a, m](double t) {
      double at = a(t);
      double r = m / at;
      return (1.0 + (1.0 - t) * r) * (1.0 - t * r);
    };
    integral += integrate(integrand, ks[i - 1].t, ks[i].t, {}, cfg).value;
  }
  return 1.0 - integral;
}

double rho_family_closed(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::T:
      return phi1(spec.y);
    case FamilyTag::L:
      return psi1(spec.y);
    case FamilyTag::P:
      return -3.0 + 12.0 * (1.0 - spec.x + spec.x * spec.y) /
                        ((2.0 - spec.x) * (1.0 + spec.y));
    case FamilyTag::Z:
    case FamilyTag::W:
      throw NoClosedForm("no closed-form rho for tags Z, W");
  }
  throw NoClosedForm("unknown family tag");
}

double tau_family_closed(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::T:
      return phi2(spec.y);
    case FamilyTag::L:
      return psi2(spec.y);
    case FamilyTag::P:
      if (spec.x == spec.y) return 1.0;  // only possible at x=y=1/2 (M)
      return (1.0 - 3.0 * spec.x - spec.y + 4.0 * spec.x * spec.y) /
             (spec.y - spec.x);
    case FamilyTag::Z:
    case FamilyTag::W:
      throw NoClosedForm("no closed-form tau for tags Z, W");
  }
  throw NoClosedForm("unknown family tag");
}

double measure_value(MeasureKind kind, const PickandsFunction& a) {
  return kind == MeasureKind::SpearmanRho ? rho(a) : tau(a);
}

double phi1(double y) {
  require(y >= 0.5 && y <= 1.0, "phi1: y must lie in [1/2,1]");
  return -3.0 + 6.0 / (1.0 + y);
}

double phi1_inv(double r) {
  require(r >= 0.0 && r <= 1.0, "phi1_inv: rho must lie in [0,1]");
  return (3.0 - r) / (3.0 + r);
}

double psi1(double y) {
  require(y >= 0.5 && y <= 1.0, "psi1: y must lie in [1/2,1]");
  return -3.0 + 12.0 * y * (2.0 - y) / ((1.0 + y) * (1.0 + y));
}

double psi1_inv(double r) {
  require(r >= 0.0 && r <= 1.0, "psi1_inv: rho must lie in [0,1]");
  // psi1(y)=r is quadratic in y: (15+r) y^2 - (18-2r) y + (3+r) = 0;
  // the root in [1/2,1] is the larger one.
  double A = 15.0 + r, B = 18.0 - 2.0 * r, C = 3.0 + r;
  double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) disc = 0.0;  // r=1 double root, rounding may dip below 0
  double y = (B + std::sqrt(disc)) / (2.0 * A);
  if (y >= 0.5 - 1e-12 && y <= 1.0 + 1e-12) {
    return std::min(1.0, std::max(0.5, y));
  }
  // fall back to bisection on the monotone branch
  return find_root([r](double z) { return psi1(z) - r; }, 0.5, 1.0).root;
}

double phi2(double y) {
  require(y >= 0.5 && y <= 1.0, "phi2: y must lie in [1/2,1]");
  return -1.0 + 1.0 / y;
}

double phi2_inv(double t) {
  require(t >= 0.0 && t <= 1.0, "phi2_inv: tau must lie in [0,1]");
  return 1.0 / (1.0 + t);
}

double psi2(double y) {
  require(y >= 0.5 && y <= 1.0, "psi2: y must lie in [1/2,1]");
  return 2.0 * (1.0 - y);
}

double psi2_inv(double t) {
  require(t >= 0.0 && t <= 1.0, "psi2_inv: tau must lie in [0,1]");
  return (2.0 - t) / 2.0;
}

double phi_inv(MeasureKind kind, double v) {
  return kind == MeasureKind::SpearmanRho ? phi1_inv(v) : phi2_inv(v);
}

double h_rho(double rho0, double y) {
  require(rho0 >= 0.0 && rho0 < 1.0, "h_rho: target must lie in [0,1)");
  require(y >= phi1_inv(rho0) - 1e-12 && y <= 1.0 + 1e-12,
          "h_rho: y must lie in [phi1_inv(rho0),1]");
  double x = 2.0 * (-3.0 + rho0 + 3.0 * y + rho0 * y) /
             (-9.0 + rho0 + 15.0 * y + rho0 * y);
  // mathematically in [0, 1-phi1_inv(rho0)]; rounding can dip just outside
  return std::min(0.5, std::max(0.0, x));
}

double h_rho_deriv(double rho0, double y) {
  require(rho0 >= 0.0 && rho0 < 1.0, "h_rho_deriv: target must lie in [0,1)");
  double d = -9.0 + rho0 + 15.0 * y + rho0 * y;
  return 36.0 * (1.0 - rho0) / (d * d);
}

double h_rho_inv(double rho0, double x) {
  require(rho0 >= 0.0 && rho0 < 1.0, "h_rho_inv: target must lie in [0,1)");
  require(x >= -1e-12 && x <= 1.0 - phi1_inv(rho0) + 1e-12,
          "h_rho_inv: x must lie in [0, 1-phi1_inv(rho0)]");
  // Moebius rearrangement of h_rho(y) = x.
  return (-6.0 + 2.0 * rho0 + (9.0 - rho0) * x) /
         ((15.0 + rho0) * x - 6.0 - 2.0 * rho0);
}

double h_tau(double tau0, double y) {
  require(tau0 >= 0.0 && tau0 < 1.0, "h_tau: target must lie in [0,1)");
  require(y >= phi2_inv(tau0) - 1e-12 && y <= 1.0 + 1e-12,
          "h_tau: y must lie in [phi2_inv(tau0),1]");
  double x = (-1.0 + y + tau0 * y) / (-3.0 + tau0 + 4.0 * y);
  return std::min(0.5, std::max(0.0, x));
}

double h_tau_deriv(double tau0, double y) {
  require(tau0 >= 0.0 && tau0 < 1.0, "h_tau_deriv: target must lie in [0,1)");
  double d = -3.0 + tau0 + 4.0 * y;
  return (1.0 - tau0) * (1.0 - tau0) / (d * d);
}

double h_tau_inv(double tau0, double x) {
  require(tau0 >= 0.0 && tau0 < 1.0, "h_tau_inv: target must lie in [0,1)");
  require(x >= -1e-12 && x <= 1.0 - phi2_inv(tau0) + 1e-12,
          "h_tau_inv: x must lie in [0, 1-phi2_inv(tau0)]");
  return ((-3.0 + tau0) * x + 1.0) / (1.0 + tau0 - 4.0 * x);
}

double h_map(MeasureKind kind, double v, double y) {
  return kind == MeasureKind::SpearmanRho ? h_rho(v, y) : h_tau(v, y);
}

}  // namespace evc

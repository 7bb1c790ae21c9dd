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

#include <cmath>
#include <random>

#include <doctest.h>

#include "evc/measures.hpp"
#include "evc/numerics.hpp"
#include "evc/sampling.hpp"

using namespace evc;

namespace {
PickandsFunction fam(FamilyTag tag, double x, double y) {
  return PickandsFunction::make_family({tag, x, y});
}
PickandsFunction independence() {
  return PickandsFunction::from_knots({{0, 1}, {1, 1}});
}

// Independent quadrature oracle for rho, used to cross-check the exact
// segment sums.
double rho_quadrature(const PickandsFunction& a) {
  std::vector<double> cuts;
  for (const Knot& k : a.knots()) cuts.push_back(k.t);
  auto f = [&a](double t) {
    double v = a(t);
    return 1.0 / ((1.0 + v) * (1.0 + v));
  };
  return -3.0 + 12.0 * integrate(f, 0.0, 1.0, cuts).value;
}
}  // namespace

TEST_CASE("rho: independence, comonotone tent, P closed form") {
  CHECK(std::fabs(rho(independence())) <= 1e-15);
  CHECK(rho(fam(FamilyTag::T, 0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  // eq for P at (0.2,0.8): -3 + 12*0.96/3.24
  double expected = -3.0 + 12.0 * 0.96 / 3.24;
  CHECK(rho(fam(FamilyTag::P, 0.2, 0.8)) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("rho segment sums agree with adaptive quadrature") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    PickandsFunction a = random_pickands(rng);
    CHECK(std::fabs(rho(a) - rho_quadrature(a)) <= 1e-11);
  }
}

TEST_CASE("tau: independence, tent, P closed form") {
  CHECK(tau(independence()) == 0.0);
  CHECK(tau(fam(FamilyTag::T, 0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tau(fam(FamilyTag::P, 0.2, 0.8)) ==
        doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("tau quadrature oracle matches the Stieltjes form") {
  CHECK(std::fabs(tau_quadrature_oracle(independence())) <= 1e-12);
  CHECK(std::fabs(tau_quadrature_oracle(fam(FamilyTag::T, 0.5, 0.5)) - 1.0) <=
        1e-10);
  CHECK(std::fabs(tau_quadrature_oracle(fam(FamilyTag::L, 0, 0.75)) - 0.5) <=
        1e-10);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    PickandsFunction a = random_pickands(rng);
    CHECK(std::fabs(tau(a) - tau_quadrature_oracle(a)) <= 1e-8);
  }
}

TEST_CASE("closed forms for T, L, P; no closed form for Z, W") {
  CHECK(rho_family_closed({FamilyTag::T, 0.6, 0.75}) ==
        doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  CHECK(rho_family_closed({FamilyTag::L, 0, 0.75}) ==
        doctest::Approx(-3.0 + 12.0 * (0.75 * 1.25) / (1.75 * 1.75))
            .epsilon(1e-15));
  CHECK(tau_family_closed({FamilyTag::P, 0.5, 0.5}) == 1.0);
  CHECK_THROWS_AS(rho_family_closed({FamilyTag::Z, 0.3, 0.8}), NoClosedForm);
  CHECK_THROWS_AS(tau_family_closed({FamilyTag::W, 0.2, 0.6}), NoClosedForm);
}

TEST_CASE("closed form vs knot computation on random admissible samples") {
  std::mt19937_64 rng(2026);
  const FamilyTag tags[] = {FamilyTag::T, FamilyTag::L, FamilyTag::P};
  for (int i = 0; i < 1000; ++i) {
    FamilySpec spec = random_family_spec(rng, tags[i % 3]);
    PickandsFunction a = PickandsFunction::make_family(spec);
    CHECK(std::fabs(rho_family_closed(spec) - rho(a)) <= 1e-12);
    CHECK(std::fabs(tau_family_closed(spec) - tau(a)) <= 1e-12);
  }
}

TEST_CASE("phi/psi transforms: endpoints, monotonicity, inverse round trips") {
  CHECK(phi1_inv(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi1_inv(0.0) == 1.0);
  CHECK(phi2_inv(0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(psi1_inv(psi1(0.8)) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(psi2_inv(psi2(0.8)) == doctest::Approx(0.8).epsilon(1e-15));

  const int grid = 512;
  double prev1 = phi1(0.5), prev2 = phi2(0.5), prev3 = psi1(0.5),
         prev4 = psi2(0.5);
  for (int i = 1; i <= grid; ++i) {
    double y = 0.5 + 0.5 * i / grid;
    CHECK(phi1(y) < prev1);
    CHECK(phi2(y) < prev2);
    CHECK(psi1(y) < prev3);
    CHECK(psi2(y) < prev4);
    prev1 = phi1(y);
    prev2 = phi2(y);
    prev3 = psi1(y);
    prev4 = psi2(y);
  }
  for (int i = 0; i <= grid; ++i) {
    double v = static_cast<double>(i) / grid;
    CHECK(std::fabs(phi1(phi1_inv(v)) - v) <= 1e-13);
    CHECK(std::fabs(phi2(phi2_inv(v)) - v) <= 1e-13);
    CHECK(std::fabs(psi1(psi1_inv(v)) - v) <= 1e-13);
    CHECK(std::fabs(psi2(psi2_inv(v)) - v) <= 1e-13);
  }
  CHECK_THROWS_AS(phi1(0.3), DomainError);
  CHECK_THROWS_AS(phi1_inv(1.5), DomainError);
}

TEST_CASE("h_rho endpoints and constant-rho composition") {
  for (double rho0 : {0.05, 0.3, 0.5, 0.77, 0.95}) {
    CHECK(std::fabs(h_rho(rho0, phi1_inv(rho0))) <= 1e-14);
    CHECK(std::fabs(h_rho(rho0, 1.0) - 2.0 * rho0 / (3.0 + rho0)) <= 1e-14);
    CHECK(std::fabs(h_rho(rho0, 1.0) - (1.0 - phi1_inv(rho0))) <= 1e-14);
  }
  for (double y : {0.72, 0.85, 1.0}) {
    double x = h_rho(0.5, y);
    CHECK(std::fabs(rho_family_closed({FamilyTag::P, x, y}) - 0.5) <= 1e-12);
  }
  CHECK_THROWS_AS(h_rho(1.0, 0.9), DomainError);
  CHECK_THROWS_AS(h_rho(0.5, 0.6), DomainError);  // below phi1_inv(0.5)=5/7
}

TEST_CASE("h_tau endpoints and constant-tau composition") {
  CHECK(std::fabs(h_tau(0.5, 2.0 / 3.0)) <= 1e-14);
  CHECK(std::fabs(h_tau(0.5, 1.0) - 1.0 / 3.0) <= 1e-14);
  for (double y : {0.7, 0.85, 1.0}) {
    double x = h_tau(0.5, y);
    CHECK(std::fabs(tau_family_closed({FamilyTag::P, x, y}) - 0.5) <= 1e-12);
  }
  CHECK_THROWS_AS(h_tau(1.0, 0.9), DomainError);
}

TEST_CASE("h maps invert in closed form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    double v = 0.999 * unit(rng);
    // The y-recovery direction loses digits as v -> 1 (the slope of h
    // collapses), so round-trip through x where both maps are tame.
    double y = phi1_inv(v) + (1.0 - phi1_inv(v)) * unit(rng);
    double xr = h_rho(v, y);
    CHECK(std::fabs(h_rho(v, h_rho_inv(v, xr)) - xr) <= 1e-13);
    double y2 = phi2_inv(v) + (1.0 - phi2_inv(v)) * unit(rng);
    double xt = h_tau(v, y2);
    CHECK(std::fabs(h_tau(v, h_tau_inv(v, xt)) - xt) <= 1e-13);
    if (v <= 0.9) {
      CHECK(std::fabs(h_rho_inv(v, xr) - y) <= 1e-11);
      CHECK(std::fabs(h_tau_inv(v, xt) - y2) <= 1e-11);
    }
  }
}

TEST_CASE("h derivative matches finite differences") {
  for (double v : {0.1, 0.5, 0.9}) {
    for (double frac : {0.3, 0.6, 0.9}) {
      double eps = 1e-6;
      double yr = phi1_inv(v) + frac * (1.0 - phi1_inv(v));
      double fd_rho = (h_rho(v, yr + eps) - h_rho(v, yr - eps)) / (2.0 * eps);
      CHECK(std::fabs(fd_rho - h_rho_deriv(v, yr)) <= 1e-7);
      double yt = phi2_inv(v) + frac * (1.0 - phi2_inv(v));
      double fd_tau = (h_tau(v, yt + eps) - h_tau(v, yt - eps)) / (2.0 * eps);
      CHECK(std::fabs(fd_tau - h_tau_deriv(v, yt)) <= 1e-7);
    }
  }
}

TEST_CASE("non-contractivity of the h maps") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double v = 0.99 * unit(rng);
    double y0r = phi1_inv(v);
    double a = y0r + (1.0 - y0r) * unit(rng);
    double b = y0r + (1.0 - y0r) * unit(rng);
    double lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo < 1e-10) continue;
    double bound = 36.0 * (1.0 - v) / ((6.0 + 2.0 * v) * (6.0 + 2.0 * v));
    CHECK(h_rho(v, hi) - h_rho(v, lo) >= bound * (hi - lo) - 1e-12);

    double y0t = phi2_inv(v);
    double a2 = y0t + (1.0 - y0t) * unit(rng);
    double b2 = y0t + (1.0 - y0t) * unit(rng);
    double lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
    if (hi2 - lo2 < 1e-10) continue;
    double bound2 = ((1.0 - v) / (1.0 + v)) * ((1.0 - v) / (1.0 + v));
    CHECK(h_tau(v, hi2) - h_tau(v, lo2) >= bound2 * (hi2 - lo2) - 1e-12);
  }
}

TEST_CASE("strict order: dominance implies strictly smaller measures") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int done = 0;
  while (done < 300) {
    double y = 0.5 + 0.5 * unit(rng);
    if (y < 0.51) continue;
    double x1 = 0.5 * unit(rng);
    double x2 = 0.5 * unit(rng);
    if (std::fabs(x1 - x2) < 1e-4) continue;
    if (x1 > x2) std::swap(x1, x2);
    PickandsFunction a = fam(FamilyTag::P, x1, y);
    PickandsFunction b = fam(FamilyTag::P, x2, y);
    // P_{x1,y} dominates P_{x2,y} for x1 < x2
    CHECK(rho(a) < rho(b));
    CHECK(tau(a) < tau(b));
    ++done;
  }
}

TEST_CASE("measures of valid functions stay within [0,1]") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    PickandsFunction a = random_pickands(rng);
    double r = rho(a), t = tau(a);
    CHECK(r >= -1e-12);
    CHECK(r <= 1.0 + 1e-12);
    CHECK(t >= -1e-12);
    CHECK(t <= 1.0 + 1e-12);
  }
}

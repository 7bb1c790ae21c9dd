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

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "evc/envelopes.hpp"
#include "evc/sampling.hpp"

using namespace evc;

namespace {
PickandsFunction fam(FamilyTag tag, double x, double y) {
  return PickandsFunction::make_family({tag, x, y});
}

// Brute-force envelope: maximum height at t over a fine sweep of P-family
// members calibrated to the target value, plus the two extreme members.
double envelope_bruteforce(MeasureKind kind, double v, double t, int y_grid) {
  double y0 = phi_inv(kind, v);
  double best = std::max(std::max(t, 1.0 - t), y0);
  for (int j = 0; j <= y_grid; ++j) {
    double y = y0 + (1.0 - y0) * j / y_grid;
    double x = h_map(kind, v, y);
    PickandsFunction a = fam(FamilyTag::P, x, y);
    best = std::max(best, a(t));
  }
  return best;
}
}  // namespace

TEST_CASE("lower bound examples") {
  CHECK(lower_bound(MeasureKind::SpearmanRho, 1.0, 0.5) == 0.5);
  // value 0 forces independence, so both bounds collapse to 1
  for (double t : {0.1, 0.3, 0.5, 0.8}) {
    CHECK(lower_bound(MeasureKind::SpearmanRho, 0.0, t) == 1.0);
  }
  CHECK(lower_bound(MeasureKind::KendallTau, 0.5, 0.5) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(lower_bound(MeasureKind::SpearmanRho, 0.25, 0.5) ==
        doctest::Approx(11.0 / 13.0).epsilon(1e-15));
}

TEST_CASE("rho upper envelope: midpoint value and three-piece structure") {
  CHECK(upper_envelope_rho(0.75, 0.5) ==
        doctest::Approx(5.0 / 7.0).epsilon(1e-15));
  // closed-form middle piece at t = 1/2
  for (double r : {0.2, 0.5, 0.9}) {
    double expected =
        (9.0 - r + 4.0 * std::sqrt(6.0 - 2.0 * r - (15.0 + r) * 0.25)) /
        (15.0 + r);
    CHECK(upper_envelope_rho(r, 0.5) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
  // outside the middle interval the envelope follows the extreme P members
  double r = 0.5;
  double tl = rho_mid_left(r), tr = rho_mid_right(r);
  CHECK(tl == doctest::Approx(2.5 / 6.5).epsilon(1e-15));
  CHECK(tr == doctest::Approx(4.0 / 6.5).epsilon(1e-15));
  PickandsFunction left = fam(FamilyTag::P, 0.0, phi1_inv(r));
  PickandsFunction right = fam(FamilyTag::P, 1.0 - phi1_inv(r), 1.0);
  for (double t : {0.05, 0.2, tl * 0.999}) {
    CHECK(upper_envelope_rho(r, t) == doctest::Approx(left(t)).epsilon(1e-13));
  }
  for (double t : {tr * 1.001, 0.8, 0.95}) {
    CHECK(upper_envelope_rho(r, t) == doctest::Approx(right(t)).epsilon(1e-13));
  }
  for (double t : {0.0, 0.3, 0.5, 1.0}) {
    CHECK(upper_envelope_rho(0.0, t) == 1.0);
  }
}

TEST_CASE("tau upper envelope is the tent with apex 1 - tau0/2") {
  CHECK(upper_envelope_tau(0.5, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(upper_envelope_tau(1.0, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
  for (double tau0 : {0.2, 0.6, 0.95}) {
    for (double t : {0.1, 0.35, 0.5, 0.62, 0.99}) {
      double expected = 1.0 - tau0 * std::min(t, 1.0 - t);
      CHECK(upper_envelope_tau(tau0, t) ==
            doctest::Approx(expected).epsilon(1e-15));
    }
  }
}

TEST_CASE("envelopes match the brute-force family sweep") {
  for (MeasureKind kind : {MeasureKind::SpearmanRho, MeasureKind::KendallTau}) {
    for (double v : {0.25, 0.5, 0.8}) {
      for (int i = 1; i < 40; ++i) {
        double t = static_cast<double>(i) / 40;
        double env = kind == MeasureKind::SpearmanRho
                         ? upper_envelope_rho(v, t)
                         : upper_envelope_tau(v, t);
        double brute = envelope_bruteforce(kind, v, t, 4000);
        CHECK(brute <= env + 1e-12);
        CHECK(env - brute <= 2e-6);
      }
    }
  }
}

TEST_CASE("envelope symmetry about t = 1/2") {
  for (double v : {0.1, 0.4, 0.7, 0.95}) {
    for (int i = 0; i <= 50; ++i) {
      double t = static_cast<double>(i) / 100;
      CHECK(upper_envelope_rho(v, t) ==
            doctest::Approx(upper_envelope_rho(v, 1.0 - t)).epsilon(1e-14));
      CHECK(upper_envelope_tau(v, t) ==
            doctest::Approx(upper_envelope_tau(v, 1.0 - t)).epsilon(1e-14));
      CHECK(lower_bound(MeasureKind::SpearmanRho, v, t) ==
            doctest::Approx(lower_bound(MeasureKind::SpearmanRho, v, 1.0 - t))
                .epsilon(1e-14));
    }
  }
}

TEST_CASE("rho envelope is convex (a sup of convex functions), and the three"
          " pieces join with matching one-sided slopes") {
  for (double r : {0.2, 0.5, 0.8}) {
    double tl = rho_mid_left(r), tr = rho_mid_right(r);
    double h = (tr - tl) / 64;
    for (int i = 1; i < 63; ++i) {
      double t = tl + i * h;
      double second = upper_envelope_rho(r, t - h) -
                      2.0 * upper_envelope_rho(r, t) +
                      upper_envelope_rho(r, t + h);
      CHECK(second >= -1e-12);
    }
    for (double tb : {tl, tr}) {
      double eps = 1e-7;
      double sl = (upper_envelope_rho(r, tb) - upper_envelope_rho(r, tb - eps)) / eps;
      double sr = (upper_envelope_rho(r, tb + eps) - upper_envelope_rho(r, tb)) / eps;
      CHECK(std::fabs(sl - sr) <= 1e-5);
    }
  }
}

TEST_CASE("region membership examples") {
  CHECK_FALSE(region_contains({MeasureKind::SpearmanRho, 0.5}, 0.5, 0.70));
  CHECK(region_contains({MeasureKind::SpearmanRho, 0.5}, 0.5, 5.0 / 7.0));
  CHECK_FALSE(region_contains({MeasureKind::KendallTau, 0.5}, 0.5, 0.76));
  CHECK(region_contains({MeasureKind::KendallTau, 0.5}, 0.5, 0.75));
  CHECK(region_contains({MeasureKind::SpearmanRho, 0.3}, 0.0, 1.0));
  CHECK(region_contains({MeasureKind::KendallTau, 0.9}, 0.0, 1.0));
  CHECK_FALSE(region_contains({MeasureKind::SpearmanRho, 0.25}, 0.5, 0.8));
}

TEST_CASE("g_fun endpoints and agreement with the P-family member") {
  // y = 1 gives the one-kink member through (1 - phi1_inv(rho0), 1)
  CHECK(g_fun(0.75, 0.5, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (double r : {0.25, 0.6, 0.85}) {
    double y0 = phi1_inv(r);
    for (double frac : {0.0, 0.3, 0.7, 1.0}) {
      double y = y0 + (1.0 - y0) * frac;
      double x = h_rho(r, y);
      PickandsFunction a = fam(FamilyTag::P, x, y);
      // g_fun extends the segment between the two kinks, so compare there
      for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double t = x + (y - x) * s;
        CHECK(std::fabs(g_fun(r, t, y) - a(t)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("y_star maximizes g_fun over the family parameter") {
  for (double r : {0.3, 0.5, 0.75}) {
    double tl = rho_mid_left(r), tr = rho_mid_right(r);
    for (double frac : {0.15, 0.5, 0.85}) {
      double t = tl + (tr - tl) * frac;
      double ys = y_star(r, t);
      CHECK(std::fabs(g_deriv(r, t, ys)) <= 1e-10);
      CHECK(std::fabs(g_fun(r, t, ys) - upper_envelope_rho(r, t)) <= 1e-12);
      // interior maximum: nearby members sit strictly lower
      CHECK(g_fun(r, t, ys) >= g_fun(r, t, std::min(1.0, ys + 1e-3)));
      CHECK(g_fun(r, t, ys) >= g_fun(r, t, ys - 1e-3));
    }
    // endpoints of the middle interval map to the extreme members
    CHECK(y_star(r, tl) == doctest::Approx(phi1_inv(r)).epsilon(1e-10));
    CHECK(y_star(r, tr) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(y_star(r, tl / 2.0), DomainError);
  }
}

TEST_CASE("t_of_y inverts y_star on the middle interval") {
  double r = 0.5;
  double tl = rho_mid_left(r), tr = rho_mid_right(r);
  CHECK(t_of_y(r, phi1_inv(r)) == doctest::Approx(tl).epsilon(1e-12));
  CHECK(t_of_y(r, 1.0) == doctest::Approx(tr).epsilon(1e-12));
  double tv = t_of_y(0.5, 0.8);
  CHECK(tv > 2.5 / 6.5);
  CHECK(tv < 4.0 / 6.5);
  double prev = tl;
  for (int i = 1; i <= 32; ++i) {
    double y = phi1_inv(r) + (1.0 - phi1_inv(r)) * i / 32;
    double t = t_of_y(r, y);
    CHECK(t > prev);
    prev = t;
    CHECK(std::fabs(y_star(r, t) - y) <= 1e-10);
  }
  for (double frac : {0.2, 0.5, 0.8}) {
    double t = tl + (tr - tl) * frac;
    CHECK(std::fabs(t_of_y(r, y_star(r, t)) - t) <= 1e-12);
  }
}

TEST_CASE("boundary_curves output") {
  auto rows = boundary_curves(MeasureKind::SpearmanRho, 0.0, 5);
  REQUIRE(rows.size() == 5);
  for (const BoundaryRow& row : rows) {
    CHECK(row.lower == 1.0);
    CHECK(row.upper == 1.0);
  }
  CHECK(rows.front().t == 0.0);
  CHECK(rows.back().t == 1.0);

  auto tent = boundary_curves(MeasureKind::KendallTau, 1.0, 11);
  for (const BoundaryRow& row : tent) {
    CHECK(row.lower == doctest::Approx(row.upper).epsilon(1e-14));
  }
  CHECK_THROWS_AS(boundary_curves(MeasureKind::SpearmanRho, 0.5, 1),
                  DomainError);
  CHECK_THROWS_AS(boundary_curves(MeasureKind::SpearmanRho, 1.5, 10),
                  DomainError);
}

TEST_CASE("witness examples") {
  // flat stretch of the lower boundary
  Witness w1 = witness(MeasureKind::SpearmanRho, 0.5, 0.5, phi1_inv(0.5));
  CHECK(std::fabs(w1.achieved_value - 0.5) <= 1e-9);
  CHECK(std::fabs(w1.function(0.5) - phi1_inv(0.5)) <= 1e-9);
  // point on the curved envelope
  double t = 0.45;
  double y = upper_envelope_rho(0.5, t);
  Witness w2 = witness(MeasureKind::SpearmanRho, 0.5, t, y);
  CHECK(std::fabs(w2.achieved_value - 0.5) <= 1e-12);
  CHECK(std::fabs(w2.function(t) - y) <= 1e-9);
  // tau band interior
  Witness w3 = witness(MeasureKind::KendallTau, 0.5, 0.3, 0.8);
  CHECK(std::fabs(w3.achieved_value - 0.5) <= 1e-9);
  CHECK(std::fabs(w3.function(0.3) - 0.8) <= 1e-9);

  CHECK_THROWS_AS(witness(MeasureKind::SpearmanRho, 0.5, 0.5, 0.6),
                  PointOutsideRegion);
  CHECK_THROWS_AS(witness(MeasureKind::KendallTau, 0.5, 0.5, 0.9),
                  PointOutsideRegion);

  // degenerate targets
  Witness w0 = witness(MeasureKind::SpearmanRho, 0.0, 0.3, 1.0);
  CHECK(std::fabs(w0.achieved_value) <= 1e-12);
  CHECK_THROWS_AS(witness(MeasureKind::SpearmanRho, 0.0, 0.3, 0.9),
                  PointOutsideRegion);
  Witness wm = witness(MeasureKind::KendallTau, 1.0, 0.3, 0.7);
  CHECK(std::fabs(wm.achieved_value - 1.0) <= 1e-12);
}

TEST_CASE("random witnesses are sound") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (MeasureKind kind : {MeasureKind::SpearmanRho, MeasureKind::KendallTau}) {
    for (int i = 0; i < 200; ++i) {
      double v = 0.02 + 0.96 * unit(rng);
      double t = 0.01 + 0.98 * unit(rng);
      Region region{kind, v};
      double lo = region.lower(t), hi = region.upper(t);
      double y = lo + (hi - lo) * unit(rng);
      Witness w = witness(kind, v, t, y);
      CHECK(std::fabs(w.achieved_value - v) <= 1e-9);
      CHECK(std::fabs(w.function(t) - y) <= 1e-9);
      CHECK(PickandsFunction::validate(w.function.knots()).ok);
    }
  }
}

TEST_CASE("calibrate_to_value hits the target from random seeds") {
  std::mt19937_64 rng(7);
  for (MeasureKind kind : {MeasureKind::SpearmanRho, MeasureKind::KendallTau}) {
    for (double v : {0.1, 0.5, 0.9}) {
      for (int i = 0; i < 30; ++i) {
        PickandsFunction seed = random_pickands(rng);
        PickandsFunction a = calibrate_to_value(kind, v, seed);
        CHECK(std::fabs(measure_value(kind, a) - v) <= 1e-10);
        // every calibrated member stays inside the band
        Region region{kind, v};
        for (int j = 0; j <= 100; ++j) {
          double t = static_cast<double>(j) / 100;
          CHECK(region.contains(t, a(t), 1e-9));
        }
      }
    }
  }
}

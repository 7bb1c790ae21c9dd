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

#include "evc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "evc/envelopes.hpp"
#include "evc/sampling.hpp"

namespace evc {
namespace {

PropertyResult make_result(const std::string& name, double worst,
                           double threshold, const std::string& detail = "") {
  return {name, worst <= threshold, worst, threshold, detail};
}

PropertyResult closed_form_agreement(MeasureKind measure,
                                     std::mt19937_64& rng, int samples) {
  const FamilyTag tags[] = {FamilyTag::T, FamilyTag::L, FamilyTag::P};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    FamilySpec spec = random_family_spec(rng, tags[i % 3]);
    PickandsFunction fn = PickandsFunction::make_family(spec);
    double closed = measure == MeasureKind::SpearmanRho
                        ? rho_family_closed(spec)
                        : tau_family_closed(spec);
    worst = std::max(worst, std::fabs(closed - measure_value(measure, fn)));
  }
  return make_result("closed_form_agreement", worst, 1e-12);
}

PropertyResult stieltjes_vs_quadrature(std::mt19937_64& rng, int samples) {
  const FamilyTag tags[] = {FamilyTag::T, FamilyTag::L, FamilyTag::P};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    FamilySpec spec = random_family_spec(rng, tags[i % 3]);
    PickandsFunction fn = PickandsFunction::make_family(spec);
    worst = std::max(worst, std::fabs(tau(fn) - tau_quadrature_oracle(fn)));
  }
  return make_result("stieltjes_vs_quadrature", worst, 1e-8);
}

PropertyResult constant_value_family(MeasureKind measure, double v,
                                     int samples) {
  if (v >= 1.0) {
    // Degenerate branch: the only member is the tent M.
    PickandsFunction m = PickandsFunction::make_family({FamilyTag::T, 0.5, 0.5});
    double worst = std::fabs(measure_value(measure, m) - 1.0);
    return make_result("constant_value_family", worst, 1e-12,
                       "degenerate v=1 branch");
  }
  double y0 = phi_inv(measure, v);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double y = y0 + (1.0 - y0) * i / (samples - 1);
    PickandsFunction fn =
        PickandsFunction::make_family({FamilyTag::P, h_map(measure, v, y), y});
    worst = std::max(worst, std::fabs(measure_value(measure, fn) - v));
  }
  return make_result("constant_value_family", worst, 1e-12);
}

PropertyResult envelope_oracle(MeasureKind measure, double v, int t_grid,
                               int y_grid) {
  Region region{measure, v};
  if (v >= 1.0) {
    double worst = 0.0;
    for (int i = 0; i < t_grid; ++i) {
      double t = static_cast<double>(i) / (t_grid - 1);
      worst = std::max(worst,
                       std::fabs(region.upper(t) - std::max(t, 1.0 - t)));
    }
    return make_result("envelope_oracle", worst, 2e-6,
                       "degenerate v=1 branch");
  }
  if (v <= 0.0) {
    double worst = 0.0;
    for (int i = 0; i < t_grid; ++i) {
      double t = static_cast<double>(i) / (t_grid - 1);
      worst = std::max(worst, std::fabs(region.upper(t) - 1.0));
    }
    return make_result("envelope_oracle", worst, 2e-6,
                       "degenerate v=0 branch");
  }
  double y0 = phi_inv(measure, v);
  std::vector<double> best(t_grid, 0.0);
  for (int j = 0; j < y_grid; ++j) {
    double y = y0 + (1.0 - y0) * j / (y_grid - 1);
    PickandsFunction fn =
        PickandsFunction::make_family({FamilyTag::P, h_map(measure, v, y), y});
    for (int i = 0; i < t_grid; ++i) {
      double t = static_cast<double>(i) / (t_grid - 1);
      best[i] = std::max(best[i], fn(t));
    }
  }
  double worst = 0.0;
  for (int i = 0; i < t_grid; ++i) {
    double t = static_cast<double>(i) / (t_grid - 1);
    worst = std::max(worst, std::fabs(region.upper(t) - best[i]));
  }
  return make_result("envelope_oracle", worst, 2e-6);
}

PropertyResult containment(MeasureKind measure, double v,
                           std::mt19937_64& rng, int members, int grid) {
  Region region{measure, v};
  double worst = 0.0;
  for (int i = 0; i < members; ++i) {
    PickandsFunction member =
        calibrate_to_value(measure, v, random_pickands(rng));
    for (int k = 0; k < grid; ++k) {
      double t = static_cast<double>(k) / (grid - 1);
      double a = member(t);
      worst = std::max(worst, region.lower(t) - a);
      worst = std::max(worst, a - region.upper(t));
    }
  }
  return make_result("containment", worst, 1e-10);
}

PropertyResult witness_soundness(MeasureKind measure, double v,
                                 std::mt19937_64& rng, int points) {
  if (v <= 0.0 || v >= 1.0) {
    // Endpoint targets: only the degenerate witnesses exist.
    double worst = 0.0;
    if (v >= 1.0) {
      Witness w = witness(measure, 1.0, 0.5, 0.5);
      worst = std::max(std::fabs(w.achieved_value - 1.0),
                       std::fabs(w.achieved_height - 0.5));
    } else {
      Witness w = witness(measure, 0.0, 0.3, 1.0);
      worst = std::max(std::fabs(w.achieved_value),
                       std::fabs(w.achieved_height - 1.0));
    }
    return make_result("witness_soundness", worst, 1e-9,
                       "degenerate endpoint branch");
  }
  Region region{measure, v};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    double t = 0.001 + 0.998 * unit(rng);
    double lo = region.lower(t), up = region.upper(t);
    double y = lo + (0.001 + 0.998 * unit(rng)) * (up - lo);
    Witness w = witness(measure, v, t, y);
    worst = std::max(worst, std::fabs(w.achieved_value - v));
    worst = std::max(worst, std::fabs(w.achieved_height - y));
  }
  return make_result("witness_soundness", worst, 1e-9);
}

PropertyResult strict_order(MeasureKind measure, std::mt19937_64& rng,
                            int pairs) {
  PickandsFunction one = PickandsFunction::from_knots({{0.0, 1.0}, {1.0, 1.0}});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_margin = 1.0;
  int done = 0;
  while (done < pairs) {
    PickandsFunction a = random_pickands(rng);
    double theta = 0.1 + 0.8 * unit(rng);
    PickandsFunction b = convex_mix(theta, a, one);  // b >= a pointwise
    if (dominates(b, a) == Dominance::Equal) continue;
    double margin = measure_value(measure, a) - measure_value(measure, b);
    worst_margin = std::min(worst_margin, margin);
    ++done;
  }
  PropertyResult r;
  r.name = "strict_order";
  r.worst_residual = worst_margin;
  r.threshold = 1e-12;
  r.pass = worst_margin > 1e-12;
  r.detail = "residual is the smallest strict margin";
  return r;
}

PropertyResult non_contractivity(MeasureKind measure, double v,
                                 std::mt19937_64& rng, int pairs) {
  if (v >= 1.0) {
    return {"non_contractivity", true, 0.0, 0.0,
            "h undefined at target 1; skipped"};
  }
  double y0 = phi_inv(measure, v);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  double bound =
      measure == MeasureKind::SpearmanRho
          ? 36.0 * (1.0 - v) / ((6.0 + 2.0 * v) * (6.0 + 2.0 * v))
          : ((1.0 - v) / (1.0 + v)) * ((1.0 - v) / (1.0 + v));
  for (int i = 0; i < pairs; ++i) {
    double ya = y0 + (1.0 - y0) * unit(rng);
    double yb = y0 + (1.0 - y0) * unit(rng);
    double lo = std::min(ya, yb), hi = std::max(ya, yb);
    if (hi - lo < 1e-12) continue;
    double growth = h_map(measure, v, hi) - h_map(measure, v, lo);
    worst = std::max(worst, bound * (hi - lo) - growth);
  }
  return make_result("non_contractivity", worst, 1e-12);
}

}  // namespace

VerifyReport run_verify(MeasureKind measure, double v, std::uint64_t seed,
                        const VerifyOptions& options) {
  std::mt19937_64 rng(seed);
  VerifyReport report;
  report.measure = measure;
  report.v = v;
  report.seed = seed;
  report.properties.push_back(
      closed_form_agreement(measure, rng, options.closed_form_samples));
  if (measure == MeasureKind::KendallTau) {
    report.properties.push_back(
        stieltjes_vs_quadrature(rng, options.closed_form_samples));
  }
  report.properties.push_back(
      constant_value_family(measure, v, options.family_y_samples));
  report.properties.push_back(envelope_oracle(
      measure, v, options.envelope_t_grid, options.envelope_y_grid));
  report.properties.push_back(containment(measure, v, rng,
                                          options.containment_members,
                                          options.containment_grid));
  report.properties.push_back(
      witness_soundness(measure, v, rng, options.witness_points));
  report.properties.push_back(
      strict_order(measure, rng, options.monotone_pairs));
  report.properties.push_back(
      non_contractivity(measure, v, rng, options.contractivity_pairs));
  for (const PropertyResult& p : report.properties) {
    report.pass = report.pass && p.pass;
  }
  return report;
}

}  // namespace evc

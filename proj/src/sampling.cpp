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

#include "evc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace evc {

PickandsFunction random_pickands(std::mt19937_64& rng, int max_points) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, std::max(1, max_points));

  std::vector<Knot> pts{{0.0, 1.0}, {1.0, 1.0}};
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    double t = 0.05 + 0.9 * unit(rng);
    double lo = std::max(t, 1.0 - t);
    double a = lo + unit(rng) * (1.0 - lo);
    pts.push_back({t, a});
  }
  std::sort(pts.begin(), pts.end(),
            [](const Knot& a, const Knot& b) { return a.t < b.t; });

  // Lower convex hull (monotone chain). Chords between points above the
  // convex floor max(t,1-t) stay above it, so the hull is a valid Pickands
  // function.
  std::vector<Knot> hull;
  for (const Knot& p : pts) {
    while (hull.size() >= 2) {
      const Knot& a = hull[hull.size() - 2];
      const Knot& b = hull.back();
      double cross = (b.t - a.t) * (p.a - a.a) - (p.t - a.t) * (b.a - a.a);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return PickandsFunction::from_knots(std::move(hull));
}

FamilySpec random_family_spec(std::mt19937_64& rng, FamilyTag tag) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FamilySpec spec;
  spec.tag = tag;
  switch (tag) {
    case FamilyTag::T:
      spec.y = 0.5 + 0.5 * unit(rng);
      spec.x = (1.0 - spec.y) + (2.0 * spec.y - 1.0) * unit(rng);
      break;
    case FamilyTag::L:
      spec.y = 0.5 + 0.5 * unit(rng);
      spec.x = 0.0;
      break;
    case FamilyTag::P:
      spec.x = 0.5 * unit(rng);
      spec.y = 0.5 + 0.5 * unit(rng);
      break;
    case FamilyTag::Z:
      spec.x = std::nextafter(0.0, 1.0) + 0.5 * unit(rng);
      spec.x = std::min(spec.x, 0.5);
      spec.y = (1.0 - spec.x) + spec.x * unit(rng);
      break;
    case FamilyTag::W:
      spec.x = 0.5 * unit(rng) * 0.999;
      spec.y = 0.5 + (0.5 - spec.x) * unit(rng);
      break;
  }
  return spec;
}

}  // namespace evc

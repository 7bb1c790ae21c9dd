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

#include "evc/pickands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace evc {
namespace {

std::string format_at(const char* what, double t) {
  std::ostringstream os;
  os << what << " at t=" << t;
  return os.str();
}

// Duplicate-abscissa collapse and collinear-knot pruning so equality
// comparison of functions is representation-independent.
std::vector<Knot> canonicalize(std::vector<Knot> knots) {
  std::vector<Knot> merged;
  merged.reserve(knots.size());
  for (const Knot& k : knots) {
    if (!merged.empty() && k.t - merged.back().t <= 1e-15) {
      continue;  // degenerate parameter corner; keep the first knot
    }
    merged.push_back(k);
  }
  std::vector<Knot> out;
  out.reserve(merged.size());
  for (const Knot& k : merged) {
    while (out.size() >= 2) {
      const Knot& p = out[out.size() - 2];
      const Knot& q = out.back();
      // q collinear with p--k?
      double cross = (q.t - p.t) * (k.a - p.a) - (k.t - p.t) * (q.a - p.a);
      if (std::fabs(cross) <= 1e-15 * std::max(1.0, std::fabs(k.t - p.t))) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(k);
  }
  return out;
}

void check_range(bool ok, const char* constraint) {
  if (!ok) throw ParameterOutOfRange(constraint);
}

std::vector<Knot> family_knots(const FamilySpec& spec) {
  const double x = spec.x;
  const double y = spec.y;
  switch (spec.tag) {
    case FamilyTag::T:
      check_range(y >= 0.5 && y <= 1.0, "T: y must lie in [1/2,1]");
      check_range(x >= 1.0 - y && x <= y, "T: x must lie in [1-y,y]");
      return {{0.0, 1.0}, {x, y}, {1.0, 1.0}};
    case FamilyTag::L:
      check_range(y >= 0.5 && y <= 1.0, "L: y must lie in [1/2,1]");
      return {{0.0, 1.0}, {1.0 - y, y}, {y, y}, {1.0, 1.0}};
    case FamilyTag::P:
      check_range(x >= 0.0 && x <= 0.5, "P: x must lie in [0,1/2]");
      check_range(y >= 0.5 && y <= 1.0, "P: y must lie in [1/2,1]");
      // Direct knot construction keeps the x -> 1-y limit exact (the
      // middle-segment formula degenerates to 0/0 at x=y=1/2).
      return {{0.0, 1.0}, {x, 1.0 - x}, {y, y}, {1.0, 1.0}};
    case FamilyTag::Z:
      check_range(x > 0.0 && x <= 0.5, "Z: x must lie in (0,1/2]");
      check_range(y >= 1.0 - x && y <= 1.0, "Z: y must lie in [1-x,1]");
      return {{0.0, 1.0}, {x, y}, {1.0 - x, y}, {1.0, 1.0}};
    case FamilyTag::W:
      check_range(x >= 0.0 && x < 0.5, "W: x must lie in [0,1/2)");
      check_range(y >= 0.5 && y <= 1.0 - x, "W: y must lie in [1/2,1-x]");
      return {{0.0, 1.0}, {x, 1.0 - x}, {0.5, y},
              {1.0 - x, 1.0 - x}, {1.0, 1.0}};
  }
  throw ParameterOutOfRange("unknown family tag");
}

}  // namespace

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::T: return "T";
    case FamilyTag::L: return "L";
    case FamilyTag::P: return "P";
    case FamilyTag::Z: return "Z";
    case FamilyTag::W: return "W";
  }
  return "?";
}

ValidationReport PickandsFunction::validate(const std::vector<Knot>& knots) {
  if (knots.size() < 2) {
    return {false, "knot list needs at least the two endpoint knots"};
  }
  if (std::fabs(knots.front().t) > kValidationSlack ||
      std::fabs(knots.back().t - 1.0) > kValidationSlack) {
    return {false, "abscissae must start at 0 and end at 1"};
  }
  for (size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].t <= knots[i - 1].t) {
      return {false, format_at("abscissae not strictly increasing",
                               knots[i].t)};
    }
  }
  if (std::fabs(knots.front().a - 1.0) > kValidationSlack) {
    return {false, "boundary condition A(0)=1 violated"};
  }
  if (std::fabs(knots.back().a - 1.0) > kValidationSlack) {
    return {false, "boundary condition A(1)=1 violated"};
  }
  for (const Knot& k : knots) {
    double lo = std::max(k.t, 1.0 - k.t);
    if (k.a < lo - kValidationSlack) {
      return {false, format_at("bound max(t,1-t) <= A(t) violated", k.t)};
    }
    if (k.a > 1.0 + kValidationSlack) {
      return {false, format_at("bound A(t) <= 1 violated", k.t)};
    }
  }
  for (size_t i = 2; i < knots.size(); ++i) {
    double m1 = (knots[i - 1].a - knots[i - 2].a) /
                (knots[i - 1].t - knots[i - 2].t);
    double m2 = (knots[i].a - knots[i - 1].a) / (knots[i].t - knots[i - 1].t);
    if (m2 < m1 - kValidationSlack) {
      return {false, format_at("convexity violated", knots[i - 1].t)};
    }
  }
  return {true, ""};
}

PickandsFunction PickandsFunction::from_knots(std::vector<Knot> knots) {
  std::vector<Knot> canon = canonicalize(std::move(knots));
  ValidationReport report = validate(canon);
  if (!report.ok) throw InvalidPickands(report.message);
  // Pin the exact boundary values so downstream arithmetic sees 0/1 exactly.
  canon.front() = {0.0, 1.0};
  canon.back() = {1.0, 1.0};
  return PickandsFunction(std::move(canon));
}

PickandsFunction PickandsFunction::make_family(const FamilySpec& spec) {
  return from_knots(family_knots(spec));
}

double PickandsFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("Pickands function evaluated outside [0,1]");
  }
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), t,
      [](double v, const Knot& k) { return v < k.t; });
  if (it == knots_.begin()) return knots_.front().a;
  if (it == knots_.end()) return knots_.back().a;
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  double w = (t - lo.t) / (hi.t - lo.t);
  return lo.a + w * (hi.a - lo.a);
}

double PickandsFunction::slope_after(double t) const {
  if (!(t >= 0.0 && t < 1.0)) {
    throw DomainError("slope_after requires t in [0,1)");
  }
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), t,
      [](double v, const Knot& k) { return v < k.t; });
  if (it == knots_.end()) --it;
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  return (hi.a - lo.a) / (hi.t - lo.t);
}

double copula_eval(const PickandsFunction& a, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("copula_eval arguments must lie in [0,1]^2");
  }
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  double lx = std::log(x);
  double lxy = std::log(x * y);
  return std::pow(x * y, a(lx / lxy));
}

Dominance dominates(const PickandsFunction& a, const PickandsFunction& b) {
  std::vector<double> grid;
  grid.reserve(a.knots().size() + b.knots().size());
  for (const Knot& k : a.knots()) grid.push_back(k.t);
  for (const Knot& k : b.knots()) grid.push_back(k.t);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  bool any_pos = false, any_neg = false, interior_zero = false;
  for (double t : grid) {
    if (t <= 0.0 || t >= 1.0) continue;
    double d = a(t) - b(t);
    if (d > 0.0) any_pos = true;
    else if (d < 0.0) any_neg = true;
    else interior_zero = true;
  }
  if (!any_pos && !any_neg) return Dominance::Equal;
  if (any_neg) return Dominance::Incomparable;
  return interior_zero ? Dominance::WeaklyOnly : Dominance::Strictly;
}

std::pair<double, double> support_bounds(const PickandsFunction& a) {
  const std::vector<Knot>& ks = a.knots();
  // A(t)-(1-t) is convex and vanishes on an initial interval [0, L_D]
  // ending at a knot (or at 0).
  double left = 0.0;
  for (const Knot& k : ks) {
    if (std::fabs(k.a - (1.0 - k.t)) <= kValidationSlack) {
      left = k.t;
    } else {
      break;
    }
  }
  double right = 1.0;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    if (std::fabs(it->a - it->t) <= kValidationSlack) {
      right = it->t;
    } else {
      break;
    }
  }
  return {left, right};
}

namespace {
double support_curve(double t, double x) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (x == 0.0) return 0.0;
  return std::pow(x, 1.0 / t - 1.0);
}
}  // namespace

bool support_contains(const PickandsFunction& a, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("support_contains arguments must lie in [0,1]^2");
  }
  auto [ld, rd] = support_bounds(a);
  return y >= support_curve(ld, x) - kValidationSlack &&
         y <= support_curve(rd, x) + kValidationSlack;
}

PickandsFunction convex_mix(double theta, const PickandsFunction& a,
                            const PickandsFunction& b) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError("convex_mix weight must lie in [0,1]");
  }
  std::vector<double> grid;
  for (const Knot& k : a.knots()) grid.push_back(k.t);
  for (const Knot& k : b.knots()) grid.push_back(k.t);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Knot> mixed;
  mixed.reserve(grid.size());
  for (double t : grid) {
    mixed.push_back({t, theta * a(t) + (1.0 - theta) * b(t)});
  }
  return PickandsFunction::from_knots(std::move(mixed));
}

}  // namespace evc

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

#ifndef EVC_PICKANDS_HPP_
#define EVC_PICKANDS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "evc/errors.hpp"

namespace evc {

struct Knot {
  double t;
  double a;
};

enum class FamilyTag { T, L, P, Z, W };

// Tagged parameters for the five piecewise-linear families. L uses y only.
struct FamilySpec {
  FamilyTag tag;
  double x = 0.0;
  double y = 1.0;
};

struct ValidationReport {
  bool ok = true;
  std::string message;  // names the first violated invariant and location
};

// Slack applied to convexity / bound checks on floating-point knots.
inline constexpr double kValidationSlack = 1e-12;

// A Pickands dependence function: convex on [0,1], A(0)=A(1)=1,
// max(t,1-t) <= A(t) <= 1. Stored as a canonical knot list (strictly
// increasing abscissae, no collinear interior knots). Immutable after
// construction.
class PickandsFunction {
 public:
  // Validates and canonicalizes; throws InvalidPickands on failure.
  static PickandsFunction from_knots(std::vector<Knot> knots);

  // Exact piecewise-linear constructor for the parametric families.
  // Throws ParameterOutOfRange for parameters outside the tag's box.
  static PickandsFunction make_family(const FamilySpec& spec);

  // Non-throwing check of the invariants on a raw knot list.
  static ValidationReport validate(const std::vector<Knot>& knots);

  // Linear interpolation; throws DomainError for t outside [0,1].
  double operator()(double t) const;

  const std::vector<Knot>& knots() const { return knots_; }

  // Slope of the segment immediately right of t (a.e. derivative A').
  double slope_after(double t) const;

  bool operator==(const PickandsFunction& other) const {
    return knots_.size() == other.knots_.size() &&
           [&] {
             for (size_t i = 0; i < knots_.size(); ++i) {
               if (knots_[i].t != other.knots_[i].t ||
                   knots_[i].a != other.knots_[i].a)
                 return false;
             }
             return true;
           }();
  }

 private:
  explicit PickandsFunction(std::vector<Knot> knots)
      : knots_(std::move(knots)) {}
  std::vector<Knot> knots_;
};

// C_A(x,y) = (xy)^{A(ln x / ln xy)} with the uniform-margin conventions on
// the boundary of the square. Throws DomainError outside [0,1]^2.
double copula_eval(const PickandsFunction& a, double x, double y);

// Classification of A relative to B on the merged knot grid (exact for
// piecewise-linear inputs):
//   Strictly     A > B everywhere on (0,1)
//   WeaklyOnly   A >= B, strict somewhere, equal at some interior point
//   Equal        identical
//   Incomparable A >= B fails somewhere
enum class Dominance { Strictly, Equal, WeaklyOnly, Incomparable };

Dominance dominates(const PickandsFunction& a, const PickandsFunction& b);

// (L_D, R_D): largest t with A(t)=1-t and smallest t with A(t)=t.
std::pair<double, double> support_bounds(const PickandsFunction& a);

// Membership of (x,y) in the support of the copula measure of C_A, i.e.
// f_{L_D}(x) <= y <= f_{R_D}(x) with f_t(x) = x^{1/t-1} (f_0=0, f_1=1).
bool support_contains(const PickandsFunction& a, double x, double y);

// Pointwise convex combination theta*a + (1-theta)*b on the merged grid.
PickandsFunction convex_mix(double theta, const PickandsFunction& a,
                            const PickandsFunction& b);

const char* family_tag_name(FamilyTag tag);

}  // namespace evc

#endif  // EVC_PICKANDS_HPP_

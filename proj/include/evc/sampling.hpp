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

#ifndef EVC_SAMPLING_HPP_
#define EVC_SAMPLING_HPP_

#include <random>

#include "evc/pickands.hpp"

namespace evc {

// Random valid Pickands function: lower convex hull of points sampled in
// the admissible band above max(t,1-t), pinned at (0,1) and (1,1).
PickandsFunction random_pickands(std::mt19937_64& rng, int max_points = 6);

// Uniform admissible parameters for the given tag.
FamilySpec random_family_spec(std::mt19937_64& rng, FamilyTag tag);

}  // namespace evc

#endif  // EVC_SAMPLING_HPP_

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

#ifndef EVC_VERIFY_HPP_
#define EVC_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "evc/measures.hpp"

namespace evc {

struct PropertyResult {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  MeasureKind measure;
  double v = 0.0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool pass = true;
};

struct VerifyOptions {
  int closed_form_samples = 200;
  int family_y_samples = 100;
  int envelope_t_grid = 201;
  int envelope_y_grid = 10000;
  int containment_members = 50;
  int containment_grid = 401;
  int witness_points = 100;
  int monotone_pairs = 100;
  int contractivity_pairs = 200;
};

// Batch run of the measure/envelope property suites at one target value.
VerifyReport run_verify(MeasureKind measure, double v, std::uint64_t seed,
                        const VerifyOptions& options = {});

}  // namespace evc

#endif  // EVC_VERIFY_HPP_

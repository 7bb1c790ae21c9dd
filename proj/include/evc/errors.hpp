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

#ifndef EVC_ERRORS_HPP_
#define EVC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace evc {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Family parameters violate the admissible range of their tag.
struct ParameterOutOfRange : DomainError {
  explicit ParameterOutOfRange(const std::string& what) : DomainError(what) {}
};

// A knot list that fails the Pickands invariants was passed where a valid
// function is required.
struct InvalidPickands : std::runtime_error {
  explicit InvalidPickands(const std::string& what)
      : std::runtime_error(what) {}
};

// Requested a closed-form measure for a family tag that has none (Z, W).
struct NoClosedForm : std::runtime_error {
  explicit NoClosedForm(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceNotReached : std::runtime_error {
  explicit ToleranceNotReached(const std::string& what)
      : std::runtime_error(what) {}
};

struct NoSignChange : std::runtime_error {
  explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};

struct PointOutsideRegion : std::runtime_error {
  explicit PointOutsideRegion(const std::string& what)
      : std::runtime_error(what) {}
};

// Sharpness logic failed to produce a witness for an interior point. Must
// never happen for v in (0,1); surfaced loudly in tests.
struct WitnessNotFound : std::runtime_error {
  explicit WitnessNotFound(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace evc

#endif  // EVC_ERRORS_HPP_

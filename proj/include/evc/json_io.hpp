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

#ifndef EVC_JSON_IO_HPP_
#define EVC_JSON_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "evc/pickands.hpp"

namespace evc {

// Input schema: {"family": {"tag": "T"|"L"|"P"|"Z"|"W", "x": ?, "y": ...}}
// or {"knots": [[t, a], ...]}. Throws InvalidPickands / ParameterOutOfRange
// on malformed or invalid input.
struct ParsedPickands {
  PickandsFunction function;
  std::optional<FamilySpec> family;  // present when the family form was used
};

ParsedPickands parse_pickands_json(const nlohmann::json& j);

nlohmann::json knots_to_json(const PickandsFunction& a);

}  // namespace evc

#endif  // EVC_JSON_IO_HPP_

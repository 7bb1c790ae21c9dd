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

#include "evc/json_io.hpp"

#include <string>
#include <vector>

namespace evc {
namespace {

FamilyTag tag_from_string(const std::string& s) {
  if (s == "T") return FamilyTag::T;
  if (s == "L") return FamilyTag::L;
  if (s == "P") return FamilyTag::P;
  if (s == "Z") return FamilyTag::Z;
  if (s == "W") return FamilyTag::W;
  throw InvalidPickands("unknown family tag \"" + s + "\"");
}

}  // namespace

ParsedPickands parse_pickands_json(const nlohmann::json& j) {
  if (j.contains("family")) {
    const auto& fam = j.at("family");
    FamilySpec spec;
    spec.tag = tag_from_string(fam.at("tag").get<std::string>());
    if (fam.contains("x")) spec.x = fam.at("x").get<double>();
    if (!fam.contains("y")) throw InvalidPickands("family needs \"y\"");
    spec.y = fam.at("y").get<double>();
    return {PickandsFunction::make_family(spec), spec};
  }
  if (j.contains("knots")) {
    std::vector<Knot> knots;
    for (const auto& pair : j.at("knots")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw InvalidPickands("knots must be [t, a] pairs");
      }
      knots.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return {PickandsFunction::from_knots(std::move(knots)), std::nullopt};
  }
  throw InvalidPickands("input needs either \"family\" or \"knots\"");
}

nlohmann::json knots_to_json(const PickandsFunction& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Knot& k : a.knots()) {
    arr.push_back(nlohmann::json::array({k.t, k.a}));
  }
  return arr;
}

}  // namespace evc

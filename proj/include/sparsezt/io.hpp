// Copyright 2026 The sparsezt Authors
//
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sparsezt/domain.hpp"
#include "sparsezt/poly.hpp"
#include "sparsezt/solver.hpp"
#include "sparsezt/tester.hpp"

// Text and JSON formats. Field elements are always written as canonical
// indices. Malformed input raises ParseError.

namespace sparsezt::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "GF(p)", "GF(p^k)" or "GF(q)" with q a prime power.
const Field& parse_field(std::string_view name);

/// Terms "c*x1^e1*x2^e2" joined by "+", in ascending exponent order; the
/// coefficient is always written, variables with exponent 0 are omitted and
/// the zero polynomial is "0". The parser also accepts spaces, a missing
/// coefficient, "xi" for "xi^1" and repeated variables.
std::string format_poly(const SparsePoly& f);
SparsePoly parse_poly(const Field& field, std::size_t nvars, std::string_view text);

nlohmann::json element_list(std::span<const FieldElement> xs);
Point parse_point(const Field& field, std::string_view text);
Point point_from_json(const Field& field, const nlohmann::json& j);

/// {"field","nvars","terms":[{"coeff":c,"exps":[...]}]}; "poly" holding the
/// text form is accepted in place of "terms".
nlohmann::json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const nlohmann::json& j, const Field* field = nullptr);

/// {"field","sets":[[...],...]}
nlohmann::json domain_to_json(const RectangularDomain& q);
RectangularDomain domain_from_json(const nlohmann::json& j, const Field* field = nullptr);

struct SystemInput {
  PolySystem system;
  std::optional<RectangularDomain> domain;
  std::optional<Point> anchor;
};

/// {"field","polys":[poly,...],"domain":{...},"anchor":[...]}
SystemInput system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const PolySystem& sys, const RectangularDomain* q, const Point* anchor);

/// verdict, witness, distance, radius, theorem, evaluations and the optional
/// budget / solver fields.
nlohmann::json report_to_json(const SearchReport& report);

nlohmann::json read_json_file(const std::string& path);

}  // namespace sparsezt::io

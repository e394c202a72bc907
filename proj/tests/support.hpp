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

// Reference helpers for tests. They evaluate through SparsePoly::evaluate and
// never touch the batch kernels, so they are independent of the code under test.

#include <algorithm>
#include <optional>
#include <vector>

#include "sparsezt/domain.hpp"
#include "sparsezt/poly.hpp"
#include "sparsezt/solver.hpp"

namespace sparsezt::testing {

inline std::vector<Point> all_points(const RectangularDomain& q) {
  std::vector<Point> out;
  GridEnumerator grid(q);
  while (grid.next()) out.push_back(grid.current());
  return out;
}

inline std::vector<Point> brute_nonzeros(const SparsePoly& f, const RectangularDomain& q) {
  std::vector<Point> out;
  for (const auto& x : all_points(q)) {
    if (!f.evaluate(x).is_zero()) out.push_back(x);
  }
  return out;
}

inline std::vector<Point> brute_solutions(const PolySystem& sys, const RectangularDomain& q) {
  std::vector<Point> out;
  for (const auto& x : all_points(q)) {
    if (std::all_of(sys.polys().begin(), sys.polys().end(),
                    [&](const SparsePoly& f) { return f.evaluate(x).is_zero(); })) {
      out.push_back(x);
    }
  }
  return out;
}

inline std::optional<std::size_t> nearest(const std::vector<Point>& set, const Point& anchor) {
  std::optional<std::size_t> best;
  for (const auto& x : set) {
    const std::size_t d = hamming_distance(x, anchor);
    if (!best || d < *best) best = d;
  }
  return best;
}

inline SparsePoly linear(const Field& field, std::size_t n, std::size_t i, const FieldElement& a) {
  return SparsePoly::variable(field, n, i) - SparsePoly::constant(field, n, a);
}

}  // namespace sparsezt::testing

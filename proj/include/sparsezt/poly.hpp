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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sparsezt/gf.hpp"

namespace sparsezt {

class RectangularDomain;

/// Exponent vector (e_1, ..., e_N).
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over a finite field.
///
/// Terms live in an ordered map keyed by exponent vector; zero coefficients
/// are never stored, so monomial_count() is exact. Variables are indexed
/// from 0 in this API and printed as x1..xN in the text format.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, FieldElement>;

  SparsePoly(const Field& field, std::size_t nvars);

  static SparsePoly constant(const Field& field, std::size_t nvars, const FieldElement& c);
  static SparsePoly variable(const Field& field, std::size_t nvars, std::size_t i);
  static SparsePoly term(const Field& field, Monomial exps, const FieldElement& c);

  const Field& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t monomial_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  FieldElement coeff(const Monomial& e) const;
  /// Adds c * X^e, merging with an existing term and pruning zeros.
  void add_term(const Monomial& e, const FieldElement& c);

  /// Exact value at x; powers by square-and-multiply.
  FieldElement evaluate(std::span<const FieldElement> x) const;

  /// max e_i over the support, or -1 for the zero polynomial.
  int degree_in_variable(std::size_t i) const;
  std::uint32_t total_degree() const;

  SparsePoly operator+(const SparsePoly& rhs) const;
  SparsePoly operator-(const SparsePoly& rhs) const;
  SparsePoly operator*(const SparsePoly& rhs) const;
  SparsePoly operator-() const;
  SparsePoly scalar_mul(const FieldElement& c) const;
  SparsePoly pow(std::uint64_t e) const;
  /// Fixes X_i = a; the result has nvars() - 1 variables.
  SparsePoly substitute(std::size_t i, const FieldElement& a) const;

  bool operator==(const SparsePoly& rhs) const {
    return field_ == rhs.field_ && nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const SparsePoly& rhs) const;

  const Field* field_;
  std::size_t nvars_;
  TermMap terms_;
};

/// Replaces each exponent by its remainder mod d; this is the remainder
/// modulo (X_1^d - 1, ..., X_N^d - 1), so it agrees with f on S^N for the
/// order-d subgroup S. Colliding monomials are summed.
SparsePoly reduce_exponents_mod(const SparsePoly& f, std::uint32_t d);

/// Normal form of f modulo the vanishing ideal of Q, generated by
/// prod_{alpha in A_i} (X_i - alpha). The leading monomials are coprime, so
/// per-variable univariate division (variables in order 1..N) yields the
/// unique remainder with deg_{X_i} < |A_i| that agrees with f on Q.
SparsePoly reduce_mod_domain(const SparsePoly& f, const RectangularDomain& q);

}  // namespace sparsezt

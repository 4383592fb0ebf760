// Copyright 2026 The dsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsforge/roots.hpp"
#include "dsforge/scalar.hpp"

namespace dsforge {

/// Eigenvalue rows xi_{i1..i,w_i}, one per conjugacy class.
struct TypeData {
  std::vector<std::vector<Scalar>> rows;

  Weights weights() const;
  const Scalar& at(int arm, int pos) const {
    return rows[static_cast<std::size_t>(arm)][static_cast<std::size_t>(pos - 1)];
  }
};

/// Rational eigenvalue rows zeta_{ij} for the additive equation.
struct AdditiveTypeData {
  std::vector<std::vector<Rational>> rows;

  Weights weights() const;
};

/// A conjugacy class given by an annihilating eigenvalue row and the ranks
/// n_j of the partial products (A - xi_1)...(A - xi_j), j = 0..d-1.
struct ClassSpec {
  std::vector<Scalar> type_row;
  std::vector<std::int64_t> dims;

  std::int64_t size() const { return dims.empty() ? 0 : dims.front(); }
  /// n_j with n_d = 0 (and 0 beyond).
  std::int64_t n(std::size_t j) const { return j < dims.size() ? dims[j] : 0; }
};

struct JordanBlock {
  Scalar eigenvalue;
  std::int64_t size = 1;
  std::int64_t count = 1;
};

struct JordanForm {
  std::vector<JordanBlock> blocks;

  std::int64_t dimension() const;
  /// Distinct eigenvalues in order of first appearance.
  std::vector<Scalar> eigenvalues() const;
  /// Block sizes of eigenvalue lambda, descending (a partition).
  std::vector<std::int64_t> partition(const Scalar& lambda) const;
  /// rank (A - lambda)^m computed from the block data.
  std::int64_t rank_of_power(const Scalar& lambda, std::int64_t m) const;
};

/// Same eigenvalues with the same block partitions.
bool same_jordan_form(const JordanForm& a, const JordanForm& b);

/// If `xi_row` is absent the minimal row is synthesised: eigenvalues in order
/// of first appearance, each repeated r_lambda (= largest block) times.
/// Throws DomainError if the given row does not annihilate the class.
ClassSpec class_from_jordan(const JordanForm& j,
                            const std::optional<std::vector<Scalar>>& xi_row = std::nullopt);

/// Inverse of class_from_jordan. Throws DomainError on an invalid ClassSpec.
JordanForm class_to_jordan(const ClassSpec& c);

struct Validation {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

Validation validate_class(const ClassSpec& c);

/// Arm-i restriction of alpha as a dims sequence (alpha_0, alpha_i1, ...).
std::vector<std::int64_t> arm_dims(const DimVector& alpha, int arm);

/// prod_i prod_j xi_ij^(alpha_{i,j-1} - alpha_ij)
Scalar xi_bracket(const TypeData& t, const DimVector& alpha);

/// sum_i sum_j zeta_ij (alpha_{i,j-1} - alpha_ij)
Rational zeta_star(const AdditiveTypeData& t, const DimVector& alpha);
bool zeta_star_is_integer(const AdditiveTypeData& t, const DimVector& alpha);

/// Subtracts 1 from n_r..n_s (1-based), which requires xi_r = xi_{s+1}.
std::vector<std::int64_t> reduce_sequence(const std::vector<std::int64_t>& n, int r, int s,
                                          const std::vector<Scalar>& xi_row);

}  // namespace dsforge

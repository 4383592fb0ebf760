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

#include <optional>
#include <vector>

#include "dsforge/classes.hpp"
#include "dsforge/linalg.hpp"

namespace dsforge {

/// Matrices rho(g_1), ..., rho(g_k) with rho(g_1)...rho(g_k) = 1.
class Representation {
 public:
  Representation() = default;
  /// Throws DomainError unless the matrices are square of one size and
  /// multiply to the identity (which also makes each invertible).
  explicit Representation(std::vector<Matrix> mats);

  std::size_t k() const { return mats_.size(); }
  std::size_t dim() const { return mats_.empty() ? 0 : mats_.front().rows(); }
  const std::vector<Matrix>& mats() const { return mats_; }
  const Matrix& operator[](std::size_t i) const { return mats_[i]; }

  static Representation direct_sum(const Representation& a, const Representation& b);

 private:
  std::vector<Matrix> mats_;
};

/// (i,1) -> 1/xi_i1, (i,j) -> xi_ij * prod_s xi_s1 / xi_i1^2.
TypeData r0_prime(const TypeData& t);
/// Swaps xi_ij and xi_i,j+1.
TypeData rv_prime(const TypeData& t, Vertex v);

/// Dimension vector of a tuple of matrices of type t, or nullopt if some
/// matrix is not annihilated by its row.
std::optional<DimVector> dimension_vector(std::span<const Matrix> mats, const TypeData& t);

struct CollapsingWitness {
  std::size_t generator = 0;  // index into rho(g_1..g_k), 0-based
  Scalar tau;
  Subspace space;  // the kernel intersection, or the proper image sum
};

struct CollapsingReport {
  bool has_collapsing_sub = false;
  bool has_collapsing_quotient = false;
  std::vector<CollapsingWitness> sub_witnesses;
  std::vector<CollapsingWitness> quotient_witnesses;

  bool noncollapsing() const { return !has_collapsing_sub && !has_collapsing_quotient; }
};

/// With A_{k+1-i} = rho(g_i)/xi_i1, checks
///   (*)  cap_{j != i} Ker(A_j - 1) cap Ker(tau A_i - 1) = 0
///   (**) sum_{j != i} Im(A_j - 1) + Im(tau A_i - 1) = V
/// for tau in {xi_i1 / xi_ij}, the only values with Ker(tau A_i - 1) != 0.
CollapsingReport collapsing_status(const Representation& rep, const TypeData& t);

struct Convolution {
  Representation rep;
  TypeData type;
  DimVector dims;
  /// Columns spanning the chosen complement of K + L in V^k.
  Matrix quotient_basis;
};

/// The middle convolution R_0. Requires prod_i xi_i1 != 1 and a
/// noncollapsing input; every postcondition is checked and a failure throws.
Convolution convolve(const Representation& rep, const TypeData& t);

}  // namespace dsforge

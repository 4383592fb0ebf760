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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsforge/scalar.hpp"

namespace dsforge {

/// Dense row-major matrix over cyclotomic scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix diagonal(std::span<const Scalar> d);
  /// Block-diagonal sum.
  static Matrix direct_sum(std::span<const Matrix> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return a_; }

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;
  Matrix hstack(const Matrix& rhs) const;
  Matrix vstack(const Matrix& rhs) const;
  void set_block(std::size_t r, std::size_t c, const Matrix& block);
  Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// M - s*1
  Matrix shifted(const Scalar& s) const;
  Matrix pow(std::size_t e) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Product of a sequence of square matrices of size n (identity if empty).
Matrix product(std::span<const Matrix> mats, std::size_t n);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Rank by eliminating the transpose; used to cross-check rank().
std::size_t rank_by_columns(const Matrix& m);

/// A subspace of K^n held as the columns of its canonical basis (the
/// transpose of the reduced row echelon form of any spanning set), so that
/// equal subspaces have equal representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const Matrix& columns);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains_vector(const Matrix& column) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

struct RankKernelImage {
  std::size_t rank = 0;
  Subspace kernel;
  Subspace image;
};

RankKernelImage rank_kernel_image(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// K^n / U with U's complement spanned by the standard vectors at the
/// non-pivot coordinates of U's canonical basis.
struct Quotient {
  Subspace sub;
  Matrix complement;  // n x (n - dim U)
  Matrix projection;  // (n - dim U) x n, kills U, identity on the complement

  std::size_t dim() const { return complement.cols(); }
  /// Endomorphism of K^n/U induced by `endo`; throws DomainError unless
  /// endo(U) is contained in U.
  Matrix induced(const Matrix& endo) const;
};

Quotient quotient(const Subspace& u);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Some X with a * X = b; nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Dimension of the unital algebra generated by square matrices of equal
/// size n; equals n^2 iff the tuple is absolutely irreducible.
std::size_t generated_algebra_dim(std::span<const Matrix> mats, std::size_t n);

enum class IsoResult { Isomorphic, NotIsomorphic, Undetermined };
std::string to_string(IsoResult r);

struct HomSpace {
  std::vector<Matrix> basis;  // each X with X A_i = B_i X
  IsoResult isomorphic = IsoResult::NotIsomorphic;
  std::optional<Matrix> witness;  // an invertible intertwiner when found
};

/// Intertwiners from (A_i) on K^nA to (B_i) on K^nB. Isomorphism is decided
/// by evaluating det(sum c_j X_j) on a grid of integer points: a nonzero value
/// proves isomorphism, and vanishing on a grid {-m..m}^dim with 2m+1 > n
/// proves det is identically zero. Grids over `max_grid_points` give
/// Undetermined.
HomSpace hom_space(std::span<const Matrix> a, std::span<const Matrix> b,
                   std::size_t max_grid_points = 200000);

}  // namespace dsforge

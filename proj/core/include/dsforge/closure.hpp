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
#include <span>
#include <string>
#include <vector>

#include "dsforge/classes.hpp"
#include "dsforge/linalg.hpp"

namespace dsforge {

/// Gerstenhaber-Hesselink order: true iff an endomorphism of Jordan type `b`
/// lies in the closure of the conjugacy class of Jordan type `a`, i.e.
/// rank (B - lambda)^m <= rank (A - lambda)^m for every lambda and m.
bool gh_leq(const JordanForm& a, const JordanForm& b);

/// A matrix in Jordan normal form.
Matrix jordan_matrix(const JordanForm& j);

/// Jordan type of `b`, assuming its spectrum lies among `candidates`.
/// Throws DomainError if the candidate generalized eigenspaces do not fill
/// the whole space.
JordanForm jordan_type(const Matrix& b, std::span<const Scalar> candidates);

/// Ranks of the partial products prod_{l<=j}(M - xi_l), j = 0..d-1, or
/// nullopt if the full product is nonzero (M is not of type xi_row).
std::optional<std::vector<std::int64_t>> matrix_dims(const Matrix& m,
                                                     std::span<const Scalar> xi_row);

struct ClosureDecision {
  bool contained = false;
  std::string reason;
  std::optional<JordanForm> matrix_type;
};

ClosureDecision closure_contains(const ClassSpec& c, const Matrix& b);

/// Chain of spaces V_0 = K^n, V_1, ..., V_d = 0 with maps
/// phi_j : V_{j-1} -> V_j (n_j x n_{j-1}) and psi_j : V_j -> V_{j-1}.
struct TripleCertificate {
  std::vector<std::int64_t> dims;  // n_0..n_{d-1}
  std::vector<Matrix> phi;         // phi[j-1] = phi_j, j = 1..d
  std::vector<Matrix> psi;
};

struct Reduction {
  int r = 0;
  int s = 0;
  friend bool operator==(Reduction, Reduction) = default;
};

/// Sequence of reductions turning `from` into `to`, found by depth-first
/// search with memoisation on visited sequences.
std::optional<std::vector<Reduction>> find_reduction_chain(const std::vector<std::int64_t>& from,
                                                           const std::vector<std::int64_t>& to,
                                                           const std::vector<Scalar>& xi_row);

enum class TripleStatus { Direct, Reduced, NotInClosure, NoChain };
std::string to_string(TripleStatus s);

struct TripleResult {
  TripleStatus status = TripleStatus::NotInClosure;
  std::optional<TripleCertificate> certificate;
  std::vector<Reduction> reductions;
  /// Dims of B's own flag when B has the class's type.
  std::optional<std::vector<std::int64_t>> matrix_dims;
};

/// The flag V_j = Im (B - xi_1)...(B - xi_j) gives the certificate directly
/// when its dims match; otherwise B's certificate is padded with one
/// block per reduction step from the class dims down to B's.
TripleResult build_triple(const ClassSpec& c, const Matrix& b);

/// Checks B - psi_1 phi_1 = xi_1 and phi_j psi_j - psi_{j+1} phi_{j+1} =
/// (xi_{j+1} - xi_j) exactly.
bool verify_triple(const TripleCertificate& cert, const Matrix& b,
                   const std::vector<Scalar>& xi_row);

}  // namespace dsforge

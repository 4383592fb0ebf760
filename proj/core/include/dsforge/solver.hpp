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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsforge/classes.hpp"
#include "dsforge/closure.hpp"
#include "dsforge/convolution.hpp"
#include "dsforge/roots.hpp"

namespace dsforge {

/// k conjugacy classes with a common size n_0, read as a type xi and a
/// dimension vector alpha on the star graph with w_i = length of row i.
struct Problem {
  Weights weights;
  std::vector<ClassSpec> classes;
  TypeData type;
  DimVector alpha;

  /// Validates every class and the common size; throws DomainError.
  static Problem from_classes(std::vector<ClassSpec> classes);
  /// Classes read off a type and a dimension vector (no validity check on
  /// the resulting classes).
  static Problem from_type(TypeData t, DimVector alpha);

  /// The eigenvalues as rationals; throws DomainError if one is irrational.
  AdditiveTypeData additive_type() const;
};

enum class DecompositionMode { Multiplicative, AdditiveZero, AdditiveInteger };
std::string to_string(DecompositionMode m);

using Decomposition = std::vector<DimVector>;

struct SearchLimits {
  std::size_t max_results = 1000;
  std::size_t max_nodes = 5'000'000;
  /// Skip the one-part decomposition {alpha}.
  bool proper_only = false;
};

struct DecompositionSearch {
  std::vector<Decomposition> results;
  /// True when a budget ran out before the search space was exhausted, so
  /// an empty result does not prove that no decomposition exists.
  bool limit_reached = false;
  std::size_t nodes = 0;
};

/// Depth-first search for multisets of positive roots summing to alpha,
/// each accepted by `admissible`. Parts are listed in decreasing
/// lexicographic order; failed residuals are memoised.
DecompositionSearch decompose(const Weights& w, const DimVector& alpha,
                              const std::function<bool(const ClassifiedRoot&)>& admissible,
                              const SearchLimits& limits = {});

std::function<bool(const ClassifiedRoot&)> admissibility(const Problem& p, DecompositionMode mode);

DecompositionSearch enumerate_admissible_decompositions(const Problem& p, DecompositionMode mode,
                                                        const SearchLimits& limits = {});

/// Re-checks a decomposition: positive roots, sum alpha, admissible parts.
bool verify_decomposition(const Weights& w, const DimVector& alpha, const Decomposition& parts,
                          const std::function<bool(const ClassifiedRoot&)>& admissible);

struct Verdict {
  bool yes = false;
  bool undetermined = false;
  std::string clause;
  Decomposition decomposition;
  std::optional<Representation> solution;
  std::vector<std::string> notes;
};

Verdict decide_closure_multiplicative(const Problem& p, const SearchLimits& limits = {});
Verdict decide_closure_additive(const Problem& p,
                                DecompositionMode mode = DecompositionMode::AdditiveZero,
                                const SearchLimits& limits = {});

struct Membership {
  bool member = false;
  bool undetermined = false;
  std::string reason;
  Decomposition witness;  // a proper decomposition when one exists
};

/// Strict real root, bracket 1, and no decomposition into two or more
/// positive roots with bracket 1.
Membership in_S_xi(const Weights& w, const TypeData& t, const DimVector& a,
                   const SearchLimits& limits = {});

Verdict decide_rigid(const Problem& p, const SearchLimits& limits = {});

enum class VertexOrder { CenterFirst, ArmsFirst };

struct RigidConstruction {
  Representation rep;
  /// Reflection vertices used on the way down to epsilon_0.
  std::vector<Vertex> steps;
  int convolutions = 0;
};

/// Builds the rigid irreducible solution by reflecting down to epsilon_0
/// and convolving back up. Throws DomainError if alpha is not in S_xi and
/// Error if a postcondition fails.
RigidConstruction construct_rigid(const Problem& p, VertexOrder order = VertexOrder::CenterFirst);

enum class CheckMode { Exact, Closure };

struct ClassCheck {
  bool ok = false;
  std::string detail;
};

struct SolutionCheck {
  bool ok = false;
  bool product_ok = false;
  std::vector<ClassCheck> classes;
  std::string first_failure;
};

SolutionCheck verify_solution(std::span<const Matrix> mats, const Problem& p, CheckMode mode);

struct ConjectureReport {
  static constexpr const char* label = "CONJECTURAL";
  bool holds = false;
  bool positive_root = false;
  bool bracket_one = false;
  bool limit_reached = false;
  std::int64_t p_alpha = 0;
  std::size_t decompositions_checked = 0;
  std::optional<Decomposition> violation;
};

/// alpha is a positive root, xi^[alpha] = 1, and p(alpha) > sum p(beta)
/// over every admissible decomposition into two or more parts.
ConjectureReport conjecture_condition(const Problem& p, const SearchLimits& limits = {});

struct GenericXi {
  TypeData type;
  std::int64_t order = 0;  // prime N with xi_ij = z_N^m_ij
  std::vector<std::vector<std::int64_t>> exponents;
  DimVector box;
  std::size_t points_checked = 0;
  std::vector<DimVector> multiples;  // the box points with bracket 1
};

/// A type xi of roots of unity with xi^[beta] = 1 for beta in the box
/// [0, box] exactly when beta is an integer multiple of a. The search is
/// deterministic; throws DomainError when the box is too large or no prime
/// up to the field-order cap works.
GenericXi generic_xi(const Weights& w, const DimVector& a, const DimVector& box,
                     std::int64_t n_hint = 5);

/// Recomputes every bracket over the box.
bool verify_generic(const Weights& w, const DimVector& a, const GenericXi& g);

}  // namespace dsforge

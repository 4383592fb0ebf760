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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dsforge {

/// A vertex of the star graph: the centre, or position `pos` (1-based) on
/// arm `arm` (0-based).
struct Vertex {
  int arm = -1;
  int pos = 0;

  static constexpr Vertex center() { return {}; }
  constexpr bool is_center() const { return pos == 0; }
  friend constexpr bool operator==(Vertex, Vertex) = default;
  std::string to_string() const;
};

/// Arm lengths w_1..w_k of the star graph; arm i carries w_i - 1 vertices.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<int> w);

  int k() const { return static_cast<int>(w_.size()); }
  int w(int arm) const { return w_[static_cast<std::size_t>(arm)]; }
  const std::vector<int>& values() const { return w_; }

  /// Number of vertices of the star graph.
  std::size_t vertex_count() const { return offsets_.back(); }
  /// Position of a vertex in the flat coordinate order: centre, then each
  /// arm outward.
  std::size_t index(Vertex v) const;
  Vertex vertex_at(std::size_t index) const;
  std::vector<Vertex> vertices() const;
  std::vector<std::size_t> neighbours(std::size_t index) const;
  bool contains(Vertex v) const;

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<int> w_;
  std::vector<std::size_t> offsets_{1};  // offsets_[i] = flat index of [i,1]
};

/// An integer vector on the vertex set, stored flat in Weights::index order.
class DimVector {
 public:
  DimVector() = default;
  DimVector(std::int64_t a0, std::vector<std::vector<std::int64_t>> arms);
  static DimVector zero(const Weights& w);
  static DimVector unit(const Weights& w, Vertex v);
  static DimVector from_flat(const Weights& w, std::vector<std::int64_t> flat);

  std::int64_t a0() const { return c_.empty() ? 0 : c_[0]; }
  /// alpha_{ij} with the conventions alpha_{i0} = alpha_0 and
  /// alpha_{i,w_i} = 0 (and 0 beyond).
  std::int64_t arm_entry(int arm, int pos) const;
  std::vector<std::vector<std::int64_t>> arms() const;
  const std::vector<std::int64_t>& flat() const { return c_; }
  const std::vector<int>& arm_lengths() const { return lengths_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  bool conforms(const Weights& w) const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  /// alpha_0 >= alpha_{i1} >= ... >= alpha_{i,w_i-1} >= 0 on every arm.
  bool is_strict() const;
  /// Componentwise <=.
  bool leq(const DimVector& other) const;
  std::int64_t total() const;

  DimVector& operator+=(const DimVector& rhs);
  DimVector& operator-=(const DimVector& rhs);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(std::int64_t s, DimVector a);
  DimVector operator-() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  /// Lexicographic on the flat coordinates.
  friend std::strong_ordering operator<=>(const DimVector& a, const DimVector& b) {
    return a.c_ <=> b.c_;
  }

  /// "(a0; a11,a12; a21; ...)"
  std::string to_string() const;

 private:
  std::vector<int> lengths_;
  std::vector<std::int64_t> c_;
};

/// The symmetric bilinear form with (e_v, e_v) = 2 and -1 across edges.
std::int64_t pairing(const Weights& w, const DimVector& a, const DimVector& b);
/// (a, e_v)
std::int64_t pairing_with_unit(const Weights& w, const DimVector& a, Vertex v);
/// q(a) = (a, a) / 2
std::int64_t quadratic_form(const Weights& w, const DimVector& a);
/// p(a) = 1 - q(a)
std::int64_t p_value(const Weights& w, const DimVector& a);

DimVector reflect(const Weights& w, Vertex v, const DimVector& a);

bool has_connected_support(const Weights& w, const DimVector& a);

/// alpha_0 = 0 and a single run of 1's on one arm: the positive roots that
/// are not strict.
bool is_nonstrict_root_shape(const DimVector& a);

enum class RootTag { NotRoot, RealRoot, ImaginaryRoot };
enum class RootSign { Positive, Negative, Mixed };

struct RootClass {
  RootTag tag = RootTag::NotRoot;
  RootSign sign = RootSign::Mixed;
  bool strict = false;
  bool in_fundamental_region = false;
  bool nonstrict_family = false;
  /// Vertices reflected at, in order, while descending |a|.
  std::vector<Vertex> descent;

  bool is_root() const { return tag != RootTag::NotRoot; }
  bool is_positive_root() const { return is_root() && sign == RootSign::Positive; }
};

std::string to_string(RootTag tag);
std::string to_string(RootSign sign);

/// Reflection-descent classification. Throws DomainError on the zero vector.
RootClass classify(const Weights& w, const DimVector& a);

struct ClassifiedRoot {
  DimVector root;
  RootClass cls;
};

/// Positive roots b with 0 <= b <= bound, in ascending lexicographic order.
std::vector<ClassifiedRoot> enumerate_positive_roots_below(const Weights& w,
                                                           const DimVector& bound);

}  // namespace dsforge

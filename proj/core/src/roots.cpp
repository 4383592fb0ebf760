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

#include "dsforge/roots.hpp"

#include <algorithm>
#include <numeric>

#include "dsforge/scalar.hpp"

namespace dsforge {

std::string Vertex::to_string() const {
  if (is_center()) return "0";
  return "[" + std::to_string(arm + 1) + "," + std::to_string(pos) + "]";
}

Weights::Weights(std::vector<int> w) : w_(std::move(w)) {
  offsets_.clear();
  std::size_t next = 1;
  for (int wi : w_) {
    if (wi < 1) throw DomainError("weights must be positive integers");
    offsets_.push_back(next);
    next += static_cast<std::size_t>(wi - 1);
  }
  offsets_.push_back(next);
}

std::size_t Weights::index(Vertex v) const {
  if (v.is_center()) return 0;
  if (!contains(v)) throw DomainError("unknown vertex " + v.to_string());
  return offsets_[static_cast<std::size_t>(v.arm)] + static_cast<std::size_t>(v.pos - 1);
}

Vertex Weights::vertex_at(std::size_t index) const {
  if (index == 0) return Vertex::center();
  for (int i = 0; i < k(); ++i) {
    const auto lo = offsets_[static_cast<std::size_t>(i)];
    const auto hi = offsets_[static_cast<std::size_t>(i) + 1];
    if (index >= lo && index < hi) return {i, static_cast<int>(index - lo) + 1};
  }
  throw DomainError("vertex index out of range");
}

std::vector<Vertex> Weights::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(vertex_at(i));
  return out;
}

std::vector<std::size_t> Weights::neighbours(std::size_t index) const {
  std::vector<std::size_t> out;
  const Vertex v = vertex_at(index);
  if (v.is_center()) {
    for (int i = 0; i < k(); ++i) {
      if (w(i) > 1) out.push_back(offsets_[static_cast<std::size_t>(i)]);
    }
    return out;
  }
  out.push_back(v.pos == 1 ? 0 : index - 1);
  if (v.pos + 1 <= w(v.arm) - 1) out.push_back(index + 1);
  return out;
}

bool Weights::contains(Vertex v) const {
  if (v.is_center()) return true;
  return v.arm >= 0 && v.arm < k() && v.pos >= 1 && v.pos <= w(v.arm) - 1;
}

DimVector::DimVector(std::int64_t a0, std::vector<std::vector<std::int64_t>> arms) {
  c_.push_back(a0);
  for (auto& arm : arms) {
    lengths_.push_back(static_cast<int>(arm.size()));
    c_.insert(c_.end(), arm.begin(), arm.end());
  }
}

DimVector DimVector::zero(const Weights& w) {
  return from_flat(w, std::vector<std::int64_t>(w.vertex_count(), 0));
}

DimVector DimVector::unit(const Weights& w, Vertex v) {
  DimVector d = zero(w);
  d.c_[w.index(v)] = 1;
  return d;
}

DimVector DimVector::from_flat(const Weights& w, std::vector<std::int64_t> flat) {
  if (flat.size() != w.vertex_count()) {
    throw DomainError("dimension vector has " + std::to_string(flat.size()) +
                      " entries, graph has " + std::to_string(w.vertex_count()) +
                      " vertices");
  }
  DimVector d;
  for (int i = 0; i < w.k(); ++i) d.lengths_.push_back(w.w(i) - 1);
  d.c_ = std::move(flat);
  return d;
}

std::int64_t DimVector::arm_entry(int arm, int pos) const {
  if (pos == 0) return a0();
  if (pos < 0 || pos > lengths_[static_cast<std::size_t>(arm)]) return 0;
  std::size_t off = 1;
  for (int i = 0; i < arm; ++i) off += static_cast<std::size_t>(lengths_[static_cast<std::size_t>(i)]);
  return c_[off + static_cast<std::size_t>(pos - 1)];
}

std::vector<std::vector<std::int64_t>> DimVector::arms() const {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t off = 1;
  for (int len : lengths_) {
    out.emplace_back(c_.begin() + static_cast<std::ptrdiff_t>(off),
                     c_.begin() + static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(len)));
    off += static_cast<std::size_t>(len);
  }
  return out;
}

bool DimVector::conforms(const Weights& w) const {
  if (static_cast<int>(lengths_.size()) != w.k()) return false;
  for (int i = 0; i < w.k(); ++i) {
    if (lengths_[static_cast<std::size_t>(i)] != w.w(i) - 1) return false;
  }
  return c_.size() == w.vertex_count();
}

bool DimVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}
bool DimVector::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x >= 0; });
}
bool DimVector::is_nonpositive() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x <= 0; });
}

bool DimVector::is_strict() const {
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    const int arm = static_cast<int>(i);
    for (int j = 1; j <= lengths_[i] + 1; ++j) {
      if (arm_entry(arm, j - 1) < arm_entry(arm, j)) return false;
    }
  }
  return a0() >= 0;
}

bool DimVector::leq(const DimVector& other) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] > other.c_[i]) return false;
  }
  return true;
}

std::int64_t DimVector::total() const {
  return std::accumulate(c_.begin(), c_.end(), std::int64_t{0});
}

DimVector& DimVector::operator+=(const DimVector& rhs) {
  if (lengths_ != rhs.lengths_) throw DomainError("dimension vector shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& rhs) {
  if (lengths_ != rhs.lengths_) throw DomainError("dimension vector shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

DimVector operator*(std::int64_t s, DimVector a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

DimVector DimVector::operator-() const { return -1 * *this; }

std::string DimVector::to_string() const {
  std::string out = "(" + std::to_string(a0());
  std::size_t off = 1;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    out += "; ";
    for (int j = 0; j < lengths_[i]; ++j) {
      if (j > 0) out += ",";
      out += std::to_string(c_[off++]);
    }
  }
  return out + ")";
}

std::int64_t pairing_with_unit(const Weights& w, const DimVector& a, Vertex v) {
  if (!a.conforms(w)) throw DomainError("dimension vector does not match weights");
  const std::size_t i = w.index(v);
  std::int64_t r = 2 * a[i];
  for (std::size_t u : w.neighbours(i)) r -= a[u];
  return r;
}

std::int64_t pairing(const Weights& w, const DimVector& a, const DimVector& b) {
  if (!a.conforms(w) || !b.conforms(w)) {
    throw DomainError("dimension vector does not match weights");
  }
  std::int64_t r = 0;
  for (std::size_t i = 0; i < w.vertex_count(); ++i) {
    r += 2 * a[i] * b[i];
    for (std::size_t u : w.neighbours(i)) r -= a[i] * b[u];
  }
  return r;
}

std::int64_t quadratic_form(const Weights& w, const DimVector& a) {
  return pairing(w, a, a) / 2;
}

std::int64_t p_value(const Weights& w, const DimVector& a) {
  return 1 - quadratic_form(w, a);
}

DimVector reflect(const Weights& w, Vertex v, const DimVector& a) {
  DimVector r = a;
  r[w.index(v)] -= pairing_with_unit(w, a, v);
  return r;
}

bool has_connected_support(const Weights& w, const DimVector& a) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) support.push_back(i);
  }
  if (support.empty()) return false;
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> stack{support.front()};
  seen[support.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t u : w.neighbours(i)) {
      if (!seen[u] && a[u] != 0) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return reached == support.size();
}

bool is_nonstrict_root_shape(const DimVector& a) {
  if (a.a0() != 0) return false;
  const auto arms = a.arms();
  int arms_used = 0;
  for (const auto& arm : arms) {
    std::size_t j = 0;
    while (j < arm.size() && arm[j] == 0) ++j;
    if (j == arm.size()) continue;
    ++arms_used;
    // first nonzero at position j+1 >= 1; the run must stay at 1 and then end.
    while (j < arm.size() && arm[j] == 1) ++j;
    while (j < arm.size() && arm[j] == 0) ++j;
    if (j != arm.size()) return false;
  }
  return arms_used == 1;
}

std::string to_string(RootTag tag) {
  switch (tag) {
    case RootTag::NotRoot: return "not_root";
    case RootTag::RealRoot: return "real";
    case RootTag::ImaginaryRoot: return "imaginary";
  }
  return "?";
}

std::string to_string(RootSign sign) {
  switch (sign) {
    case RootSign::Positive: return "positive";
    case RootSign::Negative: return "negative";
    case RootSign::Mixed: return "mixed";
  }
  return "?";
}

RootClass classify(const Weights& w, const DimVector& a) {
  if (!a.conforms(w)) throw DomainError("dimension vector does not match weights");
  if (a.is_zero()) throw DomainError("cannot classify the zero vector");
  RootClass rc;
  rc.strict = a.is_strict();
  const bool nonneg = a.is_nonnegative();
  if (!nonneg && !a.is_nonpositive()) {
    rc.sign = RootSign::Mixed;
    return rc;
  }
  rc.sign = nonneg ? RootSign::Positive : RootSign::Negative;
  DimVector b = nonneg ? a : -a;
  rc.nonstrict_family = nonneg && is_nonstrict_root_shape(b);

  for (;;) {
    if (!has_connected_support(w, b)) return rc;
    if (b.total() == 1) {
      rc.tag = RootTag::RealRoot;
      return rc;
    }
    std::size_t v = b.size();
    std::int64_t c = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      c = pairing_with_unit(w, b, w.vertex_at(i));
      if (c > 0) {
        v = i;
        break;
      }
    }
    if (v == b.size()) {
      rc.tag = RootTag::ImaginaryRoot;
      rc.in_fundamental_region = rc.descent.empty() && nonneg;
      return rc;
    }
    b[v] -= c;
    // s_v maps every positive root other than e_v to a positive root.
    if (b[v] < 0) return rc;
    rc.descent.push_back(w.vertex_at(v));
  }
}

std::vector<ClassifiedRoot> enumerate_positive_roots_below(const Weights& w,
                                                           const DimVector& bound) {
  if (!bound.conforms(w)) throw DomainError("bound does not match weights");
  if (!bound.is_nonnegative()) throw DomainError("bound must be nonnegative");
  std::vector<ClassifiedRoot> out;
  const std::size_t n = bound.size();
  std::vector<std::int64_t> cur(n, 0);
  for (;;) {
    DimVector d = DimVector::from_flat(w, cur);
    if (!d.is_zero()) {
      RootClass rc = classify(w, d);
      if (rc.is_positive_root()) out.push_back({std::move(d), std::move(rc)});
    }
    // odometer, last coordinate fastest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace dsforge

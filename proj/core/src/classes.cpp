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

#include "dsforge/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dsforge {

namespace {

std::size_t count_equal(const std::vector<Scalar>& row, std::size_t upto, const Scalar& v) {
  std::size_t c = 0;
  for (std::size_t l = 0; l < upto && l < row.size(); ++l) {
    if (row[l] == v) ++c;
  }
  return c;
}

}  // namespace

Weights TypeData::weights() const {
  std::vector<int> w;
  for (const auto& r : rows) w.push_back(static_cast<int>(r.size()));
  return Weights(std::move(w));
}

Weights AdditiveTypeData::weights() const {
  std::vector<int> w;
  for (const auto& r : rows) w.push_back(static_cast<int>(r.size()));
  return Weights(std::move(w));
}

std::int64_t JordanForm::dimension() const {
  std::int64_t n = 0;
  for (const auto& b : blocks) n += b.size * b.count;
  return n;
}

std::vector<Scalar> JordanForm::eigenvalues() const {
  std::vector<Scalar> out;
  for (const auto& b : blocks) {
    if (std::find(out.begin(), out.end(), b.eigenvalue) == out.end()) {
      out.push_back(b.eigenvalue);
    }
  }
  return out;
}

std::vector<std::int64_t> JordanForm::partition(const Scalar& lambda) const {
  std::vector<std::int64_t> parts;
  for (const auto& b : blocks) {
    if (b.eigenvalue == lambda) parts.insert(parts.end(), static_cast<std::size_t>(b.count), b.size);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::int64_t JordanForm::rank_of_power(const Scalar& lambda, std::int64_t m) const {
  std::int64_t r = dimension();
  for (const auto& b : blocks) {
    if (b.eigenvalue == lambda) r -= std::min(b.size, m) * b.count;
  }
  return r;
}

bool same_jordan_form(const JordanForm& a, const JordanForm& b) {
  if (a.dimension() != b.dimension()) return false;
  for (const auto& lambda : a.eigenvalues()) {
    if (a.partition(lambda) != b.partition(lambda)) return false;
  }
  for (const auto& lambda : b.eigenvalues()) {
    if (a.partition(lambda) != b.partition(lambda)) return false;
  }
  return true;
}

ClassSpec class_from_jordan(const JordanForm& j, const std::optional<std::vector<Scalar>>& xi_row) {
  for (const auto& b : j.blocks) {
    if (b.size < 1 || b.count < 1) throw DomainError("Jordan blocks need positive size and count");
  }
  ClassSpec c;
  if (xi_row) {
    c.type_row = *xi_row;
  } else {
    for (const auto& lambda : j.eigenvalues()) {
      const auto p = j.partition(lambda);
      c.type_row.insert(c.type_row.end(), static_cast<std::size_t>(p.front()), lambda);
    }
  }
  const std::size_t d = c.type_row.size();
  for (const auto& lambda : j.eigenvalues()) {
    const auto p = j.partition(lambda);
    if (static_cast<std::int64_t>(count_equal(c.type_row, d, lambda)) < p.front()) {
      throw DomainError("eigenvalue row does not annihilate the class: " + lambda.to_string() +
                        " needs " + std::to_string(p.front()) + " occurrences");
    }
  }
  // Restricted to the lambda-block of size b, prod_{l<=j}(A - xi_l) has rank
  // max(0, b - #{l <= j : xi_l = lambda}).
  if (d == 0) throw DomainError("empty eigenvalue row");
  for (std::size_t jj = 0; jj < d; ++jj) {
    std::int64_t n = 0;
    for (const auto& b : j.blocks) {
      const auto used = static_cast<std::int64_t>(count_equal(c.type_row, jj, b.eigenvalue));
      n += std::max<std::int64_t>(0, b.size - used) * b.count;
    }
    c.dims.push_back(n);
  }
  return c;
}

JordanForm class_to_jordan(const ClassSpec& c) {
  if (auto v = validate_class(c); !v) {
    throw DomainError("invalid class: " + v.diagnostics.front());
  }
  const std::size_t d = c.type_row.size();
  // n_{j-1} - n_j counts blocks of eigenvalue xi_j of size >= m_j.
  JordanForm out;
  std::vector<Scalar> seen;
  for (std::size_t j = 0; j < d; ++j) {
    const Scalar& lambda = c.type_row[j];
    if (std::find(seen.begin(), seen.end(), lambda) != seen.end()) continue;
    seen.push_back(lambda);
    std::vector<std::int64_t> at_least;  // at_least[m-1] = #blocks of size >= m
    for (std::size_t l = j; l < d; ++l) {
      if (c.type_row[l] == lambda) at_least.push_back(c.n(l) - c.n(l + 1));
    }
    at_least.push_back(0);
    for (std::size_t m = at_least.size() - 1; m >= 1; --m) {
      const std::int64_t exact = at_least[m - 1] - at_least[m];
      if (exact > 0) out.blocks.push_back({lambda, static_cast<std::int64_t>(m), exact});
    }
  }
  return out;
}

Validation validate_class(const ClassSpec& c) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostics.push_back(std::move(msg));
  };
  const std::size_t d = c.type_row.size();
  if (d == 0) fail("empty eigenvalue row");
  if (c.dims.size() != d) {
    fail("dims has " + std::to_string(c.dims.size()) + " entries, eigenvalue row has " +
         std::to_string(d));
    return v;
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (c.n(j) < c.n(j + 1)) {
      fail("dims not non-increasing at position " + std::to_string(j));
    }
  }
  if (d > 0 && c.dims.back() < 0) fail("negative dims entry");
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t l = j + 1; l <= d; ++l) {
      if (!(c.type_row[j - 1] == c.type_row[l - 1])) continue;
      const std::int64_t lhs = c.n(j - 1) - c.n(j);
      const std::int64_t rhs = c.n(l - 1) - c.n(l);
      if (lhs < rhs) {
        fail("equal eigenvalues at positions " + std::to_string(j) + " and " + std::to_string(l) +
             ": n_" + std::to_string(j - 1) + " - n_" + std::to_string(j) + " = " +
             std::to_string(lhs) + " < " + std::to_string(rhs) + " = n_" + std::to_string(l - 1) +
             " - n_" + std::to_string(l));
      }
    }
  }
  return v;
}

std::vector<std::int64_t> arm_dims(const DimVector& alpha, int arm) {
  std::vector<std::int64_t> out{alpha.a0()};
  const int len = alpha.arm_lengths()[static_cast<std::size_t>(arm)];
  for (int j = 1; j <= len; ++j) out.push_back(alpha.arm_entry(arm, j));
  return out;
}

Scalar xi_bracket(const TypeData& t, const DimVector& alpha) {
  const Weights w = t.weights();
  if (!alpha.conforms(w)) throw DomainError("dimension vector does not match the type");
  Scalar acc(1);
  for (int i = 0; i < w.k(); ++i) {
    for (int j = 1; j <= w.w(i); ++j) {
      const std::int64_t e = alpha.arm_entry(i, j - 1) - alpha.arm_entry(i, j);
      if (e != 0) acc *= t.at(i, j).pow(e);
    }
  }
  return acc;
}

Rational zeta_star(const AdditiveTypeData& t, const DimVector& alpha) {
  const Weights w = t.weights();
  if (!alpha.conforms(w)) throw DomainError("dimension vector does not match the type");
  Rational acc = 0;
  for (int i = 0; i < w.k(); ++i) {
    for (int j = 1; j <= w.w(i); ++j) {
      const std::int64_t e = alpha.arm_entry(i, j - 1) - alpha.arm_entry(i, j);
      if (e != 0) acc += t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] * Rational(static_cast<long>(e));
    }
  }
  return acc;
}

bool zeta_star_is_integer(const AdditiveTypeData& t, const DimVector& alpha) {
  return zeta_star(t, alpha).get_den() == 1;
}

std::vector<std::int64_t> reduce_sequence(const std::vector<std::int64_t>& n, int r, int s,
                                          const std::vector<Scalar>& xi_row) {
  const int d = static_cast<int>(xi_row.size());
  if (static_cast<int>(n.size()) != d) throw DomainError("dims and eigenvalue row differ in length");
  if (!(1 <= r && r <= s && s <= d - 1)) {
    throw DomainError("reduction needs 1 <= r <= s <= d-1");
  }
  if (!(xi_row[static_cast<std::size_t>(r - 1)] == xi_row[static_cast<std::size_t>(s)])) {
    throw DomainError("reduction needs xi_r = xi_{s+1}");
  }
  std::vector<std::int64_t> out = n;
  for (int j = r; j <= s; ++j) {
    if (--out[static_cast<std::size_t>(j)] < 0) throw DomainError("reduction makes dims negative");
  }
  return out;
}

}  // namespace dsforge

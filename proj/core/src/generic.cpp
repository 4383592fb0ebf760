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

#include <random>

#include "dsforge/solver.hpp"

namespace dsforge {

namespace {

constexpr std::size_t kMaxBoxPoints = 4'000'000;
constexpr int kAttemptsPerPrime = 24;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Increments beta_{i,j-1} - beta_ij, j = 1..w_i, in row order.
std::vector<std::int64_t> increments(const Weights& w, const DimVector& b) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < w.k(); ++i) {
    for (int j = 1; j <= w.w(i); ++j) out.push_back(b.arm_entry(i, j - 1) - b.arm_entry(i, j));
  }
  return out;
}

bool is_multiple(const DimVector& b, const DimVector& a) {
  // b = t a for an integer t >= 0
  std::int64_t t = -1;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) {
      if (b[v] != 0) return false;
      continue;
    }
    if (b[v] % a[v] != 0) return false;
    const std::int64_t q = b[v] / a[v];
    if (t >= 0 && q != t) return false;
    t = q;
  }
  return true;
}

template <class F>
void for_each_in_box(const Weights& w, const DimVector& box, F&& f) {
  DimVector b = DimVector::zero(w);
  for (;;) {
    f(b);
    std::size_t v = 0;
    while (v < b.size() && b[v] == box[v]) b[v++] = 0;
    if (v == b.size()) return;
    ++b[v];
  }
}

}  // namespace

GenericXi generic_xi(const Weights& w, const DimVector& a, const DimVector& box, std::int64_t n_hint) {
  if (!a.conforms(w) || !box.conforms(w)) throw DomainError("vectors do not match the weights");
  if (a.is_zero() || !a.is_nonnegative()) throw DomainError("generic_xi needs a nonzero nonnegative vector");
  if (!a.leq(box)) throw DomainError("box must contain the vector");
  std::size_t points = 1;
  for (std::size_t v = 0; v < box.size(); ++v) {
    points *= static_cast<std::size_t>(box[v] + 1);
    if (points > kMaxBoxPoints) throw DomainError("box too large: more than " + std::to_string(kMaxBoxPoints) + " points");
  }
  // Increments of every box point, flattened, and whether it is a multiple of a.
  std::vector<std::int64_t> incs;
  std::vector<bool> mult;
  std::vector<DimVector> multiples;
  for_each_in_box(w, box, [&](const DimVector& b) {
    auto d = increments(w, b);
    incs.insert(incs.end(), d.begin(), d.end());
    const bool m = is_multiple(b, a);
    mult.push_back(m);
    if (m && !b.is_zero()) multiples.push_back(b);
  });
  const std::vector<std::int64_t> da = increments(w, a);
  const std::size_t nvar = da.size();

  std::int64_t biggest = 0;
  for (auto d : da) biggest = std::max(biggest, d < 0 ? -d : d);
  const auto cap = static_cast<std::int64_t>(max_field_order());
  std::int64_t n = std::max<std::int64_t>(n_hint, biggest + 1);
  for (; n <= cap; ++n) {
    if (!is_prime(n)) continue;
    std::size_t pivot = nvar;
    for (std::size_t j = 0; j < nvar && pivot == nvar; ++j) {
      if (mod(da[j], n) != 0) pivot = j;
    }
    if (pivot == nvar) continue;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
    for (int attempt = 0; attempt < kAttemptsPerPrime; ++attempt) {
      std::vector<std::int64_t> m(nvar);
      std::int64_t rest = 0;
      for (std::size_t j = 0; j < nvar; ++j) {
        if (j == pivot) continue;
        m[j] = dist(rng);
        rest = mod(rest + m[j] * mod(da[j], n), n);
      }
      m[pivot] = mod(-rest * inverse_mod(da[pivot], n), n);
      bool ok = true;
      for (std::size_t pt = 0; pt < mult.size() && ok; ++pt) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < nvar; ++j) s = mod(s + m[j] * mod(incs[pt * nvar + j], n), n);
        ok = (s == 0) == mult[pt];
      }
      if (!ok) continue;
      GenericXi g;
      g.order = n;
      g.box = box;
      g.points_checked = mult.size();
      g.multiples = multiples;
      std::size_t at = 0;
      for (int i = 0; i < w.k(); ++i) {
        auto& row = g.type.rows.emplace_back();
        auto& ex = g.exponents.emplace_back();
        for (int j = 1; j <= w.w(i); ++j, ++at) {
          ex.push_back(m[at]);
          row.push_back(Scalar::root_of_unity(static_cast<std::uint64_t>(n), m[at]));
        }
      }
      return g;
    }
  }
  throw DomainError("no generic type found with field order up to " + std::to_string(cap));
}

bool verify_generic(const Weights& w, const DimVector& a, const GenericXi& g) {
  bool ok = true;
  for_each_in_box(w, g.box, [&](const DimVector& b) {
    if (ok) ok = xi_bracket(g.type, b).is_one() == is_multiple(b, a);
  });
  return ok;
}

}  // namespace dsforge

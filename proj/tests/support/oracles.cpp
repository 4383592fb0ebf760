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

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dsforge/closure.hpp"

namespace dsforge::testing {

namespace {

// Adjacency of the star graph built from the arm lengths alone.
std::vector<std::vector<std::size_t>> star_edges(const Weights& w) {
  std::size_t n = 1;
  for (int i = 0; i < w.k(); ++i) n += static_cast<std::size_t>(w.w(i) - 1);
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t at = 1;
  for (int i = 0; i < w.k(); ++i) {
    std::size_t prev = 0;
    for (int j = 1; j < w.w(i); ++j, ++at) {
      adj[prev].push_back(at);
      adj[at].push_back(prev);
      prev = at;
    }
  }
  return adj;
}

std::int64_t form_with_unit(const std::vector<std::vector<std::size_t>>& adj, const Flat& v, std::size_t u) {
  std::int64_t s = 2 * v[u];
  for (auto nb : adj[u]) s -= v[nb];
  return s;
}

std::int64_t mass(const Flat& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool connected_support(const std::vector<std::vector<std::size_t>>& adj, const Flat& v) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) supp.push_back(i);
  }
  if (supp.empty()) return false;
  std::vector<bool> seen(v.size(), false);
  std::deque<std::size_t> q{supp.front()};
  seen[supp.front()] = true;
  std::size_t count = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    ++count;
    for (auto nb : adj[u]) {
      if (v[nb] != 0 && !seen[nb]) {
        seen[nb] = true;
        q.push_back(nb);
      }
    }
  }
  return count == supp.size();
}

template <class F>
void for_each_nonneg_of_mass_at_most(std::size_t dim, std::int64_t max_mass, F&& f) {
  Flat v(dim, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == dim) {
      f(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[i] = x;
      self(self, i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(rec, 0, max_mass);
}

void close_upwards(const std::vector<std::vector<std::size_t>>& adj, std::set<Flat>& found, std::int64_t max_mass) {
  std::deque<Flat> q(found.begin(), found.end());
  while (!q.empty()) {
    Flat v = q.front();
    q.pop_front();
    for (std::size_t u = 0; u < v.size(); ++u) {
      const std::int64_t c = form_with_unit(adj, v, u);
      if (c >= 0) continue;  // reflecting would not raise the mass
      Flat r = v;
      r[u] -= c;
      if (mass(r) > max_mass) continue;
      if (found.insert(r).second) q.push_back(std::move(r));
    }
  }
}

}  // namespace

RootOracle::RootOracle(const Weights& weights, std::int64_t mm) : w(weights), max_mass(mm) {
  const auto adj = star_edges(w);
  const std::size_t n = adj.size();
  for (std::size_t u = 0; u < n; ++u) {
    Flat e(n, 0);
    e[u] = 1;
    real.insert(e);
  }
  close_upwards(adj, real, max_mass);
  for_each_nonneg_of_mass_at_most(n, max_mass, [&](const Flat& v) {
    if (!connected_support(adj, v)) return;
    for (std::size_t u = 0; u < n; ++u) {
      if (form_with_unit(adj, v, u) > 0) return;
    }
    imaginary.insert(v);
  });
  close_upwards(adj, imaginary, max_mass);
}

RootTag RootOracle::tag(const DimVector& d) const {
  Flat v = d.flat();
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x <= 0; })) {
    for (auto& x : v) x = -x;
  }
  if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) return RootTag::NotRoot;
  if (mass(v) > max_mass) throw DomainError("oracle asked beyond its mass bound");
  if (real.count(v)) return RootTag::RealRoot;
  if (imaginary.count(v)) return RootTag::ImaginaryRoot;
  return RootTag::NotRoot;
}

std::set<std::vector<Flat>> brute_force_decompositions(const Weights& w, const DimVector& alpha,
                                                       const std::function<bool(const DimVector&)>& admissible,
                                                       bool proper_only) {
  const RootOracle oracle(w, alpha.total());
  std::vector<Flat> parts;
  for (const auto* s : {&oracle.real, &oracle.imaginary}) {
    for (const auto& r : *s) {
      bool below = true;
      for (std::size_t i = 0; i < r.size(); ++i) below = below && r[i] <= alpha[i];
      if (below && admissible(DimVector::from_flat(w, r))) parts.push_back(r);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::set<std::vector<Flat>> out;
  std::vector<Flat> cur;
  auto rec = [&](auto&& self, Flat residual, std::size_t start) -> void {
    if (std::all_of(residual.begin(), residual.end(), [](auto x) { return x == 0; })) {
      if (!(proper_only && cur.size() == 1)) out.insert(cur);
      return;
    }
    for (std::size_t i = start; i < parts.size(); ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < residual.size(); ++j) fits = fits && parts[i][j] <= residual[j];
      if (!fits) continue;
      Flat next = residual;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] -= parts[i][j];
      cur.push_back(parts[i]);
      self(self, next, i);
      cur.pop_back();
    }
  };
  rec(rec, alpha.flat(), 0);
  return out;
}

std::vector<Partition> partitions(std::int64_t n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::int64_t left, std::int64_t maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool dominates(const Partition& p, const Partition& q) {
  std::int64_t sp = 0, sq = 0;
  for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    sp += i < p.size() ? p[i] : 0;
    sq += i < q.size() ? q[i] : 0;
    if (sp < sq) return false;
  }
  return true;
}

std::int64_t Gen::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Scalar Gen::cyclotomic(std::uint64_t n, int terms) {
  Scalar s;
  for (int t = 0; t < terms; ++t) {
    s += Scalar(Rational(static_cast<long>(uniform(-3, 3)), static_cast<unsigned long>(uniform(1, 2)))) *
         root_of_unity(n);
  }
  return s;
}

Matrix Gen::invertible(std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(static_cast<long>(uniform(-2, 2)));
    }
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix Gen::upper_triangular(std::span<const Scalar> diag) {
  const std::size_t n = diag.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = diag[r];
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = Scalar(static_cast<long>(uniform(-2, 2)));
  }
  return m;
}

std::vector<Matrix> conjugate(std::span<const Matrix> mats, const Matrix& p) {
  const Matrix pi = *inverse(p);
  std::vector<Matrix> out;
  for (const auto& m : mats) out.push_back(pi * m * p);
  return out;
}

std::vector<Scalar> minimal_row(const Matrix& m, std::span<const Scalar> candidates, const Scalar& first) {
  const JordanForm j = jordan_type(m, candidates);
  std::vector<Scalar> eig = j.eigenvalues();
  auto it = std::find(eig.begin(), eig.end(), first);
  if (it == eig.end()) throw DomainError("first eigenvalue is not an eigenvalue");
  std::rotate(eig.begin(), it, it + 1);
  std::vector<Scalar> row;
  for (const auto& l : eig) row.insert(row.end(), static_cast<std::size_t>(j.partition(l).front()), l);
  return row;
}

std::vector<Matrix> random_rep(Gen& g, std::size_t n, std::size_t k, std::uint64_t order) {
  std::vector<Matrix> mats;
  Matrix acc = Matrix::identity(n);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::vector<Scalar> diag;
    for (std::size_t r = 0; r < n; ++r) diag.push_back(g.root_of_unity(order));
    mats.push_back(g.upper_triangular(diag));
    acc = acc * mats.back();
  }
  mats.push_back(*inverse(acc));
  return conjugate(mats, g.invertible(n));
}

TypeData random_minimal_type(Gen& g, std::span<const Matrix> mats, std::uint64_t order) {
  std::vector<Scalar> roots;
  for (std::uint64_t e = 0; e < order; ++e) roots.push_back(Scalar::root_of_unity(order, static_cast<std::int64_t>(e)));
  TypeData t;
  for (const auto& m : mats) {
    const auto eig = jordan_type(m, roots).eigenvalues();
    const Scalar first = eig[static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(eig.size()) - 1))];
    t.rows.push_back(minimal_row(m, roots, first));
  }
  return t;
}

}  // namespace dsforge::testing

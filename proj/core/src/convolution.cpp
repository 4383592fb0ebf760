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

#include "dsforge/convolution.hpp"

#include <algorithm>

#include "dsforge/closure.hpp"

namespace dsforge {

Representation::Representation(std::vector<Matrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw DomainError("representation needs at least one generator");
  const std::size_t n = mats_.front().rows();
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    if (!mats_[i].is_square() || mats_[i].rows() != n) {
      throw DomainError("generator " + std::to_string(i + 1) + " is not a square matrix of size " +
                        std::to_string(n));
    }
  }
  if (!product(mats_, n).is_identity()) throw DomainError("generators do not multiply to the identity");
}

Representation Representation::direct_sum(const Representation& a, const Representation& b) {
  if (a.k() != b.k()) throw DomainError("direct sum of representations with different k");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.k(); ++i) {
    const Matrix blocks[] = {a[i], b[i]};
    out.push_back(Matrix::direct_sum(blocks));
  }
  return Representation(std::move(out));
}

TypeData r0_prime(const TypeData& t) {
  Scalar lambda(1);
  for (const auto& row : t.rows) {
    if (row.empty()) throw DomainError("empty eigenvalue row");
    if (row.front().is_zero()) throw DomainError("r0_prime needs nonzero xi_i1");
    lambda *= row.front();
  }
  TypeData out = t;
  for (auto& row : out.rows) {
    const Scalar inv = row.front().inverse();
    const Scalar factor = lambda * inv * inv;
    row.front() = inv;
    for (std::size_t j = 1; j < row.size(); ++j) row[j] *= factor;
  }
  return out;
}

TypeData rv_prime(const TypeData& t, Vertex v) {
  if (v.is_center() || v.arm < 0 || v.arm >= static_cast<int>(t.rows.size())) {
    throw DomainError("rv_prime needs an arm vertex of the type");
  }
  auto& row = t.rows[static_cast<std::size_t>(v.arm)];
  if (v.pos < 1 || v.pos >= static_cast<int>(row.size())) {
    throw DomainError("vertex " + v.to_string() + " out of range");
  }
  TypeData out = t;
  auto& r = out.rows[static_cast<std::size_t>(v.arm)];
  std::swap(r[static_cast<std::size_t>(v.pos - 1)], r[static_cast<std::size_t>(v.pos)]);
  return out;
}

std::optional<DimVector> dimension_vector(std::span<const Matrix> mats, const TypeData& t) {
  if (mats.size() != t.rows.size()) throw DomainError("number of matrices differs from number of rows");
  std::int64_t a0 = 0;
  std::vector<std::vector<std::int64_t>> arms;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    auto dims = matrix_dims(mats[i], t.rows[i]);
    if (!dims) return std::nullopt;
    a0 = dims->front();
    arms.emplace_back(dims->begin() + 1, dims->end());
  }
  return DimVector(a0, std::move(arms));
}

namespace {

void require_type(const Representation& rep, const TypeData& t) {
  if (rep.k() != t.rows.size()) throw DomainError("representation and type have different k");
  if (!dimension_vector(rep.mats(), t)) throw DomainError("representation is not of the given type");
}

// A-indexing of the convolution: A[k-1-i] = rho(g_i) / xi_i1.
std::vector<Matrix> normalized(const Representation& rep, const TypeData& t) {
  const std::size_t k = rep.k();
  std::vector<Matrix> a(k);
  for (std::size_t i = 0; i < k; ++i) a[k - 1 - i] = rep[i] * t.rows[i].front().inverse();
  return a;
}

// Values tau with Ker(tau A - 1) != 0 for A[k-1-i]: xi_i1 / xi_ij.
std::vector<Scalar> tau_candidates(const TypeData& t, std::size_t gen) {
  std::vector<Scalar> out;
  const auto& row = t.rows[gen];
  for (const auto& x : row) {
    Scalar tau = row.front() / x;
    if (std::find(out.begin(), out.end(), tau) == out.end()) out.push_back(std::move(tau));
  }
  return out;
}

}  // namespace

CollapsingReport collapsing_status(const Representation& rep, const TypeData& t) {
  require_type(rep, t);
  const std::size_t k = rep.k();
  const std::size_t n = rep.dim();
  const auto a = normalized(rep, t);
  CollapsingReport report;
  for (std::size_t ai = 0; ai < k; ++ai) {
    const std::size_t gen = k - 1 - ai;
    Subspace others_ker = Subspace::full(n);
    Subspace others_im = Subspace::zero(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == ai) continue;
      const Matrix s = a[j].shifted(Scalar(1));
      others_ker = intersect(others_ker, kernel(s));
      others_im = sum(others_im, image(s));
    }
    for (const auto& tau : tau_candidates(t, gen)) {
      const Matrix s = (a[ai] * tau).shifted(Scalar(1));
      if (others_ker.dim() > 0) {
        Subspace w = intersect(others_ker, kernel(s));
        if (w.dim() > 0) {
          report.has_collapsing_sub = true;
          report.sub_witnesses.push_back({gen, tau, std::move(w)});
        }
      }
      Subspace u = sum(others_im, image(s));
      if (u.dim() < n) {
        report.has_collapsing_quotient = true;
        report.quotient_witnesses.push_back({gen, tau, std::move(u)});
      }
    }
  }
  return report;
}

Convolution convolve(const Representation& rep, const TypeData& t) {
  require_type(rep, t);
  const Weights w = t.weights();
  const std::size_t k = rep.k();
  const std::size_t n = rep.dim();
  Scalar lambda(1);
  for (const auto& row : t.rows) lambda *= row.front();
  if (lambda.is_one()) throw DomainError("convolution needs prod_i xi_i1 != 1");
  const auto status = collapsing_status(rep, t);
  if (status.has_collapsing_sub) {
    throw DomainError("representation has a collapsing subrepresentation (generator " +
                      std::to_string(status.sub_witnesses.front().generator + 1) + ")");
  }
  if (status.has_collapsing_quotient) {
    throw DomainError("representation has a collapsing quotient (generator " +
                      std::to_string(status.quotient_witnesses.front().generator + 1) + ")");
  }
  const DimVector alpha = *dimension_vector(rep.mats(), t);

  const auto a = normalized(rep, t);
  const std::size_t big = k * n;
  const Matrix one = Matrix::identity(n);
  std::vector<Matrix> g;
  Matrix stacked(0, big);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix gi = Matrix::identity(big);
    for (std::size_t j = 0; j < k; ++j) {
      Matrix blk = j == i ? a[j] * lambda : a[j] - one;
      if (j > i) blk *= lambda;
      gi.set_block(i * n, j * n, blk);
    }
    stacked = stacked.vstack(gi.shifted(Scalar(1)));
    g.push_back(std::move(gi));
  }
  const Subspace kk = kernel(Matrix::direct_sum(a).shifted(Scalar(1)));
  const Subspace ll = kernel(stacked);
  const Quotient q = quotient(sum(kk, ll));

  const TypeData t2 = r0_prime(t);
  std::vector<Matrix> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t gen = k - 1 - i;
    out[gen] = q.induced(g[i]) * t.rows[gen].front().inverse();
  }

  std::int64_t expected = -alpha.a0();
  for (int i = 0; i < w.k(); ++i) expected += alpha.arm_entry(i, 1);
  if (static_cast<std::int64_t>(q.dim()) != expected) {
    throw Error("internal: convolution has dimension " + std::to_string(q.dim()) + ", expected " +
                std::to_string(expected));
  }
  if (!product(out, q.dim()).is_identity()) throw Error("internal: convolution product is not the identity");
  const auto dims = dimension_vector(out, t2);
  if (!dims) throw Error("internal: convolution output is not of type r0'(xi)");
  const DimVector reflected = reflect(w, Vertex::center(), alpha);
  if (!(*dims == reflected)) {
    throw Error("internal: convolution output has dimension vector " + dims->to_string() +
                ", expected " + reflected.to_string());
  }
  return {Representation(std::move(out)), t2, *dims, q.complement};
}

}  // namespace dsforge

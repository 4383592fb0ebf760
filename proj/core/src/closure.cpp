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

#include "dsforge/closure.hpp"

#include <algorithm>
#include <set>

namespace dsforge {

bool gh_leq(const JordanForm& a, const JordanForm& b) {
  const std::int64_t n = a.dimension();
  if (n != b.dimension()) throw DomainError("gh_leq: Jordan forms of different size");
  std::vector<Scalar> eig = a.eigenvalues();
  for (const auto& l : b.eigenvalues()) {
    if (std::find(eig.begin(), eig.end(), l) == eig.end()) eig.push_back(l);
  }
  for (const auto& l : eig) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (b.rank_of_power(l, m) > a.rank_of_power(l, m)) return false;
    }
  }
  return true;
}

Matrix jordan_matrix(const JordanForm& j) {
  const auto n = static_cast<std::size_t>(j.dimension());
  Matrix m(n, n);
  std::size_t at = 0;
  for (const auto& b : j.blocks) {
    for (std::int64_t c = 0; c < b.count; ++c) {
      for (std::int64_t s = 0; s < b.size; ++s, ++at) {
        m(at, at) = b.eigenvalue;
        if (s + 1 < b.size) m(at, at + 1) = Scalar(1);
      }
    }
  }
  return m;
}

JordanForm jordan_type(const Matrix& b, std::span<const Scalar> candidates) {
  if (!b.is_square()) throw DomainError("Jordan type of a non-square matrix");
  const std::size_t n = b.rows();
  JordanForm out;
  std::vector<Scalar> seen;
  std::size_t filled = 0;
  for (const auto& lambda : candidates) {
    if (std::find(seen.begin(), seen.end(), lambda) != seen.end()) continue;
    seen.push_back(lambda);
    const Matrix shifted = b.shifted(lambda);
    // ranks[m] = rank (B - lambda)^m until it stabilises
    std::vector<std::size_t> ranks{n};
    Matrix power = Matrix::identity(n);
    for (;;) {
      power = power * shifted;
      const std::size_t r = rank(power);
      if (r == ranks.back()) break;
      ranks.push_back(r);
    }
    filled += n - ranks.back();
    for (std::size_t m = 1; m < ranks.size(); ++m) {
      const std::size_t at_least = ranks[m - 1] - ranks[m];
      const std::size_t at_least_next = m + 1 < ranks.size() ? ranks[m] - ranks[m + 1] : 0;
      if (at_least > at_least_next) {
        out.blocks.push_back({lambda, static_cast<std::int64_t>(m),
                              static_cast<std::int64_t>(at_least - at_least_next)});
      }
    }
  }
  if (filled != n) {
    throw DomainError("matrix has eigenvalues outside the candidate set (" + std::to_string(n - filled) +
                      " of " + std::to_string(n) + " dimensions unaccounted)");
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [&](const JordanBlock& x, const JordanBlock& y) {
    return x.size > y.size;
  });
  return out;
}

std::optional<std::vector<std::int64_t>> matrix_dims(const Matrix& m,
                                                     std::span<const Scalar> xi_row) {
  if (!m.is_square()) throw DomainError("matrix_dims of a non-square matrix");
  std::vector<std::int64_t> dims;
  Matrix partial = Matrix::identity(m.rows());
  for (const auto& xi : xi_row) {
    dims.push_back(static_cast<std::int64_t>(rank(partial)));
    partial = partial * m.shifted(xi);
  }
  if (!partial.is_zero()) return std::nullopt;
  return dims;
}

ClosureDecision closure_contains(const ClassSpec& c, const Matrix& b) {
  if (auto v = validate_class(c); !v) throw DomainError("invalid class: " + v.diagnostics.front());
  if (!b.is_square() || static_cast<std::int64_t>(b.rows()) != c.size()) {
    throw DomainError("closure_contains: matrix size does not match the class");
  }
  const JordanForm a = class_to_jordan(c);
  ClosureDecision out;
  try {
    out.matrix_type = jordan_type(b, c.type_row);
  } catch (const DomainError&) {
    // The characteristic polynomial is constant on the closure, so an
    // eigenvalue outside the class spectrum decides the question.
    out.reason = "matrix has eigenvalues outside the class spectrum";
    return out;
  }
  out.contained = gh_leq(a, *out.matrix_type);
  out.reason = out.contained ? "rank (B - l)^m <= rank (A - l)^m for all l, m"
                             : "a rank inequality rank (B - l)^m <= rank (A - l)^m fails";
  return out;
}

std::optional<std::vector<Reduction>> find_reduction_chain(const std::vector<std::int64_t>& from,
                                                           const std::vector<std::int64_t>& to,
                                                           const std::vector<Scalar>& xi_row) {
  const int d = static_cast<int>(xi_row.size());
  if (static_cast<int>(from.size()) != d || static_cast<int>(to.size()) != d) {
    throw DomainError("reduction chain: sequence lengths differ from the eigenvalue row");
  }
  std::vector<Reduction> moves;
  for (int r = 1; r <= d - 1; ++r) {
    for (int s = r; s <= d - 1; ++s) {
      if (xi_row[static_cast<std::size_t>(r - 1)] == xi_row[static_cast<std::size_t>(s)]) {
        moves.push_back({r, s});
      }
    }
  }
  std::set<std::vector<std::int64_t>> dead;
  std::vector<Reduction> path;
  auto dfs = [&](auto&& self, const std::vector<std::int64_t>& cur) -> bool {
    if (cur == to) return true;
    if (dead.count(cur)) return false;
    for (const auto& mv : moves) {
      std::vector<std::int64_t> next = cur;
      bool ok = true;
      for (int j = mv.r; j <= mv.s; ++j) {
        auto& x = next[static_cast<std::size_t>(j)];
        if (--x < to[static_cast<std::size_t>(j)] || x < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      path.push_back(mv);
      if (self(self, next)) return true;
      path.pop_back();
    }
    dead.insert(cur);
    return false;
  };
  for (std::size_t j = 0; j < from.size(); ++j) {
    if (from[j] < to[j]) return std::nullopt;
  }
  if (!dfs(dfs, from)) return std::nullopt;
  return path;
}

std::string to_string(TripleStatus s) {
  switch (s) {
    case TripleStatus::Direct: return "direct";
    case TripleStatus::Reduced: return "reduced";
    case TripleStatus::NotInClosure: return "not_in_closure";
    case TripleStatus::NoChain: return "in_closure_no_chain";
  }
  return "?";
}

namespace {

// Certificate read off B's own flag V_j = Im (B - xi_1)...(B - xi_j), with
// V_0 in standard coordinates.
TripleCertificate flag_certificate(const Matrix& b, const std::vector<Scalar>& row) {
  const std::size_t n = b.rows();
  const std::size_t d = row.size();
  std::vector<Matrix> bases{Matrix::identity(n)};
  Matrix partial = Matrix::identity(n);
  for (std::size_t j = 1; j <= d; ++j) {
    partial = partial * b.shifted(row[j - 1]);
    bases.push_back(image(partial).basis());
  }
  TripleCertificate cert;
  for (std::size_t j = 0; j < d; ++j) cert.dims.push_back(static_cast<std::int64_t>(bases[j].cols()));
  for (std::size_t j = 1; j <= d; ++j) {
    auto phi = solve(bases[j], b.shifted(row[j - 1]) * bases[j - 1]);
    auto psi = solve(bases[j - 1], bases[j]);
    if (!phi || !psi) throw Error("internal: flag is not (B - xi_j)-stable");
    cert.phi.push_back(std::move(*phi));
    cert.psi.push_back(std::move(*psi));
  }
  return cert;
}

}  // namespace

TripleResult build_triple(const ClassSpec& c, const Matrix& b) {
  if (auto v = validate_class(c); !v) throw DomainError("invalid class: " + v.diagnostics.front());
  if (!b.is_square() || static_cast<std::int64_t>(b.rows()) != c.size()) {
    throw DomainError("build_triple: matrix size does not match the class");
  }
  const auto& row = c.type_row;
  const std::size_t d = row.size();
  TripleResult out;
  out.matrix_dims = matrix_dims(b, row);
  if (!out.matrix_dims) {
    // The closure lies inside the locus prod (B - xi_j) = 0.
    out.status = TripleStatus::NotInClosure;
    return out;
  }
  TripleCertificate base = flag_certificate(b, row);
  if (*out.matrix_dims == c.dims) {
    out.status = TripleStatus::Direct;
    out.certificate = std::move(base);
    return out;
  }
  auto chain = find_reduction_chain(c.dims, *out.matrix_dims, row);
  if (!chain) {
    out.status = closure_contains(c, b).contained ? TripleStatus::NoChain : TripleStatus::NotInClosure;
    return out;
  }
  out.reductions = *chain;
  // One extra block per reduction (r, s): K at positions r..s, with
  // phi_j = (xi_r - xi_j) and psi_j = 1 for r < j <= s.
  TripleCertificate cert;
  cert.dims = c.dims;
  for (std::size_t j = 1; j <= d; ++j) {
    std::vector<Matrix> phi_blocks{base.phi[j - 1]};
    std::vector<Matrix> psi_blocks{base.psi[j - 1]};
    for (const auto& red : *chain) {
      const auto r = static_cast<std::size_t>(red.r);
      const auto s = static_cast<std::size_t>(red.s);
      const std::size_t prev = (r <= j - 1 && j - 1 <= s) ? 1 : 0;
      const std::size_t next = (r <= j && j <= s) ? 1 : 0;
      Matrix phi(next, prev), psi(prev, next);
      if (prev == 1 && next == 1) {
        phi(0, 0) = row[r - 1] - row[j - 1];
        psi(0, 0) = Scalar(1);
      }
      phi_blocks.push_back(std::move(phi));
      psi_blocks.push_back(std::move(psi));
    }
    cert.phi.push_back(Matrix::direct_sum(phi_blocks));
    cert.psi.push_back(Matrix::direct_sum(psi_blocks));
  }
  if (!verify_triple(cert, b, row)) throw Error("internal: assembled triple certificate fails verification");
  out.status = TripleStatus::Reduced;
  out.certificate = std::move(cert);
  return out;
}

bool verify_triple(const TripleCertificate& cert, const Matrix& b, const std::vector<Scalar>& xi_row) {
  const std::size_t d = xi_row.size();
  if (cert.dims.size() != d || cert.phi.size() != d || cert.psi.size() != d) {
    throw DomainError("triple certificate length does not match the eigenvalue row");
  }
  auto dim = [&](std::size_t j) -> std::size_t {
    return j < d ? static_cast<std::size_t>(cert.dims[j]) : 0;
  };
  if (!b.is_square() || b.rows() != dim(0)) throw DomainError("triple certificate: B has the wrong size");
  for (std::size_t j = 1; j <= d; ++j) {
    const Matrix& phi = cert.phi[j - 1];
    const Matrix& psi = cert.psi[j - 1];
    if (phi.rows() != dim(j) || phi.cols() != dim(j - 1) || psi.rows() != dim(j - 1) ||
        psi.cols() != dim(j)) {
      throw DomainError("triple certificate: map " + std::to_string(j) + " has the wrong shape");
    }
  }
  if (!(b - cert.psi[0] * cert.phi[0] == Matrix::scalar(dim(0), xi_row[0]))) return false;
  for (std::size_t j = 1; j < d; ++j) {
    const Matrix lhs = cert.phi[j - 1] * cert.psi[j - 1] - cert.psi[j] * cert.phi[j];
    if (!(lhs == Matrix::scalar(dim(j), xi_row[j] - xi_row[j - 1]))) return false;
  }
  return true;
}

}  // namespace dsforge

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

#include "dsforge/linalg.hpp"

#include <algorithm>
#include <deque>

namespace dsforge {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::direct_sum(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  return block(0, first, rows_, count);
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  return block(first, 0, count, cols_);
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw DomainError("hstack: row counts differ");
  Matrix m(rows_, cols_ + rhs.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, rhs);
  return m;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  if (cols_ != rhs.cols_) throw DomainError("vstack: column counts differ");
  Matrix m(rows_ + rhs.rows_, cols_);
  m.set_block(0, 0, *this);
  m.set_block(rows_, 0, rhs);
  return m;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw DomainError("block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw DomainError("block out of range");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(r + i, c + j);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(l, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::shifted(const Scalar& s) const {
  if (!is_square()) throw DomainError("shift of a non-square matrix");
  Matrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m(i, i) -= s;
  return m;
}

Matrix Matrix::pow(std::size_t e) const {
  Matrix r = identity(rows_);
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) {
      out += j ? ", " : "";
      out += (*this)(i, j).to_string();
    }
  }
  return out + "]";
}

Matrix product(std::span<const Matrix> mats, std::size_t n) {
  Matrix p = Matrix::identity(n);
  for (const auto& m : mats) p = p * m;
  return p;
}

Echelon row_echelon(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

std::size_t rank_by_columns(const Matrix& m) { return row_echelon(m.transpose()).pivots.size(); }

namespace {

// Canonical basis columns for the row space of `rows`.
std::pair<Matrix, std::vector<std::size_t>> canonical_rows(const Matrix& rows) {
  Echelon e = row_echelon(rows);
  Matrix basis = e.reduced.rows_range(0, e.pivots.size()).transpose();
  return {std::move(basis), std::move(e.pivots)};
}

}  // namespace

Subspace Subspace::span(const Matrix& columns) {
  Subspace s;
  s.ambient_ = columns.rows();
  s.basis_ = canonical_rows(columns.transpose()).first;
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

bool Subspace::contains_vector(const Matrix& column) const {
  if (column.rows() != ambient_ || column.cols() != 1) throw DomainError("vector of wrong size");
  // Basis column i is 1 at its pivot and 0 at the other pivots, so
  // membership reduces to matching the pivot coordinates.
  Matrix rest = column;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t p = 0;
    while (basis_(p, i).is_zero()) ++p;
    const Scalar c = rest(p, 0);
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < ambient_; ++r) {
      if (!basis_(r, i).is_zero()) rest(r, 0) -= c * basis_(r, i);
    }
  }
  return rest.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DomainError("subspaces of different ambient spaces");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains_vector(other.basis_.column(i))) return false;
  }
  return true;
}

RankKernelImage rank_kernel_image(const Matrix& m) {
  Echelon e = row_echelon(m);
  RankKernelImage out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix kb(m.cols(), m.cols() - out.rank);
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    kb(f, k) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) kb(e.pivots[i], k) = -e.reduced(i, f);
    ++k;
  }
  out.kernel = Subspace::span(kb);
  out.image = Subspace::span(m);
  return out;
}

Subspace kernel(const Matrix& m) { return rank_kernel_image(m).kernel; }
Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("subspaces of different ambient spaces");
  return Subspace::span(a.basis().hstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("subspaces of different ambient spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // (x, y) with A x = B y
  const Matrix stacked = a.basis().hstack(Scalar(-1) * b.basis());
  const Subspace ker = kernel(stacked);
  return Subspace::span(a.basis() * ker.basis().rows_range(0, a.dim()));
}

Quotient quotient(const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  Quotient q;
  q.sub = u;
  std::vector<bool> pivot(n, false);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::size_t p = 0;
    while (u.basis()(p, i).is_zero()) ++p;
    pivot[p] = true;
  }
  q.complement = Matrix(n, n - u.dim());
  std::size_t c = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (!pivot[r]) q.complement(r, c++) = Scalar(1);
  }
  auto inv = inverse(u.basis().hstack(q.complement));
  if (!inv) throw Error("internal: complement basis is singular");
  q.projection = inv->rows_range(u.dim(), n - u.dim());
  return q;
}

Matrix Quotient::induced(const Matrix& endo) const {
  if (!endo.is_square() || endo.rows() != sub.ambient_dim()) {
    throw DomainError("induced map needs an endomorphism of the ambient space");
  }
  if (!sub.contains(Subspace::span(endo * sub.basis()))) {
    throw DomainError("endomorphism does not preserve the subspace");
  }
  return projection * endo * complement;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = row_echelon(m.hstack(Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
      }
    }
  }
  return det;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row counts differ");
  const std::size_t n = a.cols();
  Echelon e = row_echelon(a.hstack(b));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

namespace {

// Echelon basis grown one vector at a time; rows are reduced against all
// earlier rows on insertion, so reducing in insertion order clears every
// pivot.
class IncrementalBasis {
 public:
  bool insert(std::vector<Scalar> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(std::vector<Scalar>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
      }
    }
  }

  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t generated_algebra_dim(std::span<const Matrix> mats, std::size_t n) {
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw DomainError("generators must be n x n");
  }
  if (n == 0) return 0;
  IncrementalBasis basis;
  std::deque<Matrix> queue{Matrix::identity(n)};
  basis.insert(queue.front().entries());
  while (!queue.empty()) {
    const Matrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : mats) {
      Matrix y = x * g;
      if (basis.insert(y.entries())) queue.push_back(std::move(y));
    }
  }
  return basis.size();
}

std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic: return "isomorphic";
    case IsoResult::NotIsomorphic: return "not_isomorphic";
    case IsoResult::Undetermined: return "undetermined";
  }
  return "?";
}

HomSpace hom_space(std::span<const Matrix> a, std::span<const Matrix> b,
                   std::size_t max_grid_points) {
  if (a.size() != b.size()) throw DomainError("hom_space: tuples of different length");
  const std::size_t na = a.empty() ? 0 : a[0].rows();
  const std::size_t nb = b.empty() ? 0 : b[0].rows();
  for (const auto& m : a) {
    if (m.rows() != na || m.cols() != na) throw DomainError("hom_space: ragged tuple");
  }
  for (const auto& m : b) {
    if (m.rows() != nb || m.cols() != nb) throw DomainError("hom_space: ragged tuple");
  }
  HomSpace out;
  const std::size_t unknowns = nb * na;
  // Unknown x_{pq} sits at p*na + q; one equation per (i, p, q) of X A_i - B_i X.
  Matrix system(a.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t p = 0; p < nb; ++p) {
      for (std::size_t q = 0; q < na; ++q, ++row) {
        for (std::size_t r = 0; r < na; ++r) system(row, p * na + r) += a[i](r, q);
        for (std::size_t r = 0; r < nb; ++r) system(row, r * na + q) -= b[i](p, r);
      }
    }
  }
  const Subspace ker = a.empty() ? Subspace::full(unknowns) : kernel(system);
  for (std::size_t c = 0; c < ker.dim(); ++c) {
    Matrix x(nb, na);
    for (std::size_t u = 0; u < unknowns; ++u) x(u / na, u % na) = ker.basis()(u, c);
    out.basis.push_back(std::move(x));
  }

  if (na != nb) {
    out.isomorphic = IsoResult::NotIsomorphic;
    return out;
  }
  if (na == 0) {
    out.isomorphic = IsoResult::Isomorphic;
    out.witness = Matrix(0, 0);
    return out;
  }
  for (const auto& x : out.basis) {
    if (!determinant(x).is_zero()) {
      out.isomorphic = IsoResult::Isomorphic;
      out.witness = x;
      return out;
    }
  }
  const std::size_t dim = out.basis.size();
  if (dim <= 1) {
    out.isomorphic = IsoResult::NotIsomorphic;
    return out;
  }
  // det(sum c_j X_j) has degree <= n in each c_j; vanishing on S^dim with
  // |S| > n forces it to vanish identically.
  const std::int64_t m = std::max<std::int64_t>(2, static_cast<std::int64_t>((na + 1) / 2));
  const std::size_t side = static_cast<std::size_t>(2 * m + 1);
  bool complete = true;
  std::size_t points = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (points > max_grid_points / side) {
      complete = false;
      points = max_grid_points;
      break;
    }
    points *= side;
  }
  std::vector<std::int64_t> c(dim, -m);
  for (std::size_t visited = 0; visited < points; ++visited) {
    Matrix x(na, na);
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[j] != 0) x += Scalar(static_cast<long>(c[j])) * out.basis[j];
    }
    if (!determinant(x).is_zero()) {
      out.isomorphic = IsoResult::Isomorphic;
      out.witness = std::move(x);
      return out;
    }
    for (std::size_t j = 0; j < dim; ++j) {
      if (++c[j] <= m) break;
      c[j] = -m;
    }
  }
  out.isomorphic = complete ? IsoResult::NotIsomorphic : IsoResult::Undetermined;
  return out;
}

}  // namespace dsforge

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

#include "dsforge/scalar.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <utility>

namespace dsforge {

namespace {

constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

std::atomic<std::uint64_t>& field_order_ceiling() {
  static std::atomic<std::uint64_t> ceiling = [] {
    if (const char* env = std::getenv("DSFORGE_MAX_FIELD_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1) return std::uint64_t{v};
    }
    return kDefaultMaxFieldOrder;
  }();
  return ceiling;
}

void check_order(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic field order must be positive");
  if (n > max_field_order()) {
    throw FieldOrderError("cyclotomic field order " + std::to_string(n) +
                          " exceeds the ceiling " +
                          std::to_string(max_field_order()));
  }
}

// Reduces a polynomial in zeta_n to the canonical power basis. Exponents are
// first folded modulo n (zeta^n = 1), then divided by the monic cyclotomic
// polynomial.
std::vector<Rational> reduce_mod(std::vector<Rational> p, std::uint64_t n) {
  const std::size_t phi = euler_phi(n);
  if (p.size() > n) {
    for (std::size_t i = n; i < p.size(); ++i) p[i % n] += p[i];
    p.resize(n);
  }
  if (p.size() > phi) {
    const auto& f = cyclotomic_polynomial(n);
    for (std::size_t i = p.size(); i-- > phi;) {
      if (sgn(p[i]) == 0) continue;
      const Rational c = p[i];
      for (std::size_t j = 0; j < phi; ++j) {
        if (sgn(f[j]) != 0) p[i - phi + j] -= c * f[j];
      }
      p[i] = 0;
    }
  }
  p.resize(phi);
  return p;
}

// Gauss-Jordan solve of M y = rhs over Q; M square and invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                     std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw DomainError("inversion of zero");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Integer> den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const Integer c = num[i];  // den is monic
      quot[i - dd] = c;
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

std::uint64_t max_field_order() { return field_order_ceiling().load(); }

void set_max_field_order(std::uint64_t n) {
  if (n == 0) throw DomainError("field order ceiling must be positive");
  field_order_ceiling().store(n);
}

std::uint64_t common_field_order(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t l = std::lcm(a, b);
  check_order(l);
  return l;
}

Scalar::Scalar() : order_(1), coeffs_{Rational(0)} {}
Scalar::Scalar(long value) : order_(1), coeffs_{Rational(value)} {}
Scalar::Scalar(const Rational& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}
Scalar::Scalar(std::uint64_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Scalar Scalar::root_of_unity(std::uint64_t n, std::int64_t k) {
  check_order(n);
  const auto sn = static_cast<std::int64_t>(n);
  const auto e = static_cast<std::size_t>(((k % sn) + sn) % sn);
  std::vector<Rational> p(e + 1, 0);
  p[e] = 1;
  return Scalar(n, reduce_mod(std::move(p), n));
}

Scalar Scalar::from_coefficients(std::uint64_t n, std::vector<Rational> coeffs) {
  check_order(n);
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.empty()) coeffs.push_back(0);
  return Scalar(n, reduce_mod(std::move(coeffs), n));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) {
    throw DomainError("scalar " + to_string() + " is not rational");
  }
  return coeffs_[0];
}

Scalar Scalar::in_field(std::uint64_t l) const {
  if (l == order_) return *this;
  if (l % order_ != 0) {
    throw DomainError("cannot embed Q(z" + std::to_string(order_) +
                      ") into Q(z" + std::to_string(l) + ")");
  }
  check_order(l);
  if (order_ == 1) {
    std::vector<Rational> c(euler_phi(l), 0);
    c[0] = coeffs_[0];
    return Scalar(l, std::move(c));
  }
  // zeta_n = zeta_l^(l/n)
  const std::uint64_t step = l / order_;
  std::vector<Rational> p((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Scalar(l, reduce_mod(std::move(p), l));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  if (order_ == 1) return Scalar(Rational(1 / coeffs_[0]));
  const std::size_t phi = coeffs_.size();
  // Column j of m holds the coordinates of this * z^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, 0));
  std::vector<Rational> shifted(coeffs_);
  for (std::size_t j = 0; j < phi; ++j) {
    for (std::size_t r = 0; r < phi; ++r) m[r][j] = shifted[r];
    shifted.insert(shifted.begin(), Rational(0));
    shifted = reduce_mod(std::move(shifted), order_);
  }
  std::vector<Rational> e0(phi, 0);
  e0[0] = 1;
  return Scalar(order_, solve_rational(std::move(m), std::move(e0)));
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  Scalar result = Scalar(1).in_field(order_);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.order_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const std::uint64_t l = common_field_order(order_, rhs.order_);
  if (l != order_) *this = in_field(l);
  if (rhs.order_ == l) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    const Scalar r = rhs.in_field(l);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.order_ == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    const Rational f = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  const std::uint64_t l = common_field_order(order_, rhs.order_);
  const Scalar a = in_field(l);
  const Scalar b = rhs.in_field(l);
  std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) != 0) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  order_ = l;
  coeffs_ = reduce_mod(std::move(p), l);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const std::uint64_t l = common_field_order(a.order_, b.order_);
  return a.in_field(l).coeffs_ == b.in_field(l).coeffs_;
}

std::string Scalar::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      std::string sym = "z" + std::to_string(order_);
      if (k > 1) sym += "^" + std::to_string(k);
      if (c == 1) {
        term = sym;
      } else if (c == -1) {
        term = "-" + sym;
      } else {
        term = c.get_str() + "*" + sym;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

std::vector<Scalar> coerce(std::span<const Scalar> values) {
  std::uint64_t l = 1;
  for (const auto& v : values) l = common_field_order(l, v.field_order());
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.in_field(l));
  return out;
}

}  // namespace dsforge

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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsforge {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition or inconsistent shapes.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested cyclotomic field exceeds the configured order ceiling.
class FieldOrderError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

std::uint64_t euler_phi(std::uint64_t n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n);

/// Ceiling on cyclotomic field orders. Defaults to 2^20, or the value of
/// DSFORGE_MAX_FIELD_ORDER when set.
std::uint64_t max_field_order();
void set_max_field_order(std::uint64_t n);

/// lcm(a, b), throwing FieldOrderError above max_field_order().
std::uint64_t common_field_order(std::uint64_t a, std::uint64_t b);

/// An element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
/// reduced modulo the N-th cyclotomic polynomial. Two scalars of the same
/// field are equal iff their coefficient vectors are equal; scalars of
/// different fields are compared after embedding both into Q(zeta_lcm).
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k for any integer k.
  static Scalar root_of_unity(std::uint64_t n, std::int64_t k = 1);

  /// Builds an element from power-basis coordinates; reduces if the vector is
  /// longer than phi(n).
  static Scalar from_coefficients(std::uint64_t n, std::vector<Rational> coeffs);

  std::uint64_t field_order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError unless is_rational().
  Rational to_rational() const;

  /// The same number viewed in Q(zeta_l); l must be a multiple of field_order().
  Scalar in_field(std::uint64_t l) const;

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text in the scalar grammar, e.g. "1/2 - 3*z8^2".
  std::string to_string() const;

 private:
  Scalar(std::uint64_t order, std::vector<Rational> coeffs);

  std::uint64_t order_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Embeds every value into Q(zeta_L), L the lcm of the input field orders.
std::vector<Scalar> coerce(std::span<const Scalar> values);

/// Parses the scalar grammar:
///   expr   := term (('+'|'-') term)*
///   term   := atom (('*'|'/') atom)*
///   atom   := rational | 'z' INT ('^' ['-'] INT)? | '(' expr ')' | '-' atom
///   rational := INT ('/' INT)?
/// Throws ParseError with the byte offset of the problem.
Scalar parse_scalar(std::string_view text);

}  // namespace dsforge

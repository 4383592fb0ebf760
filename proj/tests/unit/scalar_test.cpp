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

#include <doctest.h>

#include "../support/oracles.hpp"
#include "dsforge/scalar.hpp"

using namespace dsforge;

namespace {

Scalar z(std::uint64_t n, std::int64_t k = 1) { return Scalar::root_of_unity(n, k); }

// Restores the field-order ceiling when a test lowers it.
struct FieldCap {
  explicit FieldCap(std::uint64_t n) : saved(max_field_order()) { set_max_field_order(n); }
  ~FieldCap() { set_max_field_order(saved); }
  std::uint64_t saved;
};

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(24) == 8);
  CHECK(euler_phi(97) == 96);
  const auto& p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == 1);
  CHECK(p12[2] == -1);
  CHECK(p12[4] == 1);
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
}

TEST_CASE("the N-th cyclotomic polynomial vanishes at z_N for N <= 24") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    const auto& poly = cyclotomic_polynomial(n);
    CHECK(poly.size() == euler_phi(n) + 1);
    Scalar acc;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      acc += Scalar(Rational(poly[k])) * z(n, static_cast<std::int64_t>(k));
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("roots of unity reduce canonically") {
  CHECK(z(4, 2) == Scalar(-1));
  CHECK(z(3) + z(3, 2) == Scalar(-1));
  CHECK(z(6, 6).is_one());
  CHECK(z(8, -1) == z(8, 7));
  CHECK(z(8, 2) == z(4));
  CHECK(z(1).is_one());
  CHECK(z(12, 3) == z(4));
  CHECK(z(5, 1000000007) == z(5, 1000000007 % 5));
}

TEST_CASE("parse examples") {
  CHECK(parse_scalar("1/2") == Scalar(Rational(1, 2)));
  CHECK(parse_scalar("z4^2") == Scalar(-1));
  CHECK(parse_scalar("z3 + z3^2") == Scalar(-1));
  CHECK(parse_scalar("-(1 - z4)*z4") == z(4, 2) - z(4));
  CHECK(parse_scalar("  3/6 ") == Scalar(Rational(1, 2)));
  CHECK(parse_scalar("z8^-1") == z(8, 7));
  CHECK(parse_scalar("1/z4") == z(4, 3));
  CHECK(parse_scalar("2*-z6") == Scalar(-2) * z(6));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_scalar(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1/0") == 1);
  CHECK(position_of("z0") == 0);
  CHECK(position_of("2 + ") == 4);
  CHECK(position_of("z4^") == 3);
  CHECK(position_of("(1 + z3") == 7);
  CHECK(position_of("1 ? 2") == 2);
  CHECK(position_of("z") == 1);
  CHECK_THROWS_WITH_AS(parse_scalar("1/(z4 - z4)"), "division by zero at position 1", ParseError);
}

TEST_CASE("printing") {
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar(Rational(-3, 4)).to_string() == "-3/4");
  CHECK(z(8, 3).to_string() == "z8^3");
  CHECK((Scalar(1) - z(8)).to_string() == "1 - z8");
  CHECK((Scalar(Rational(1, 2)) * z(5, 2) - z(5)).to_string() == "-z5 + 1/2*z5^2");
  CHECK(z(4, 2).to_string() == "-1");
}

TEST_CASE("print then parse is the identity") {
  testing::Gen g(11);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.uniform(1, 30));
    const Scalar s = g.cyclotomic(n, static_cast<int>(g.uniform(0, 4)));
    CAPTURE(s.to_string());
    CHECK(parse_scalar(s.to_string()) == s);
  }
}

TEST_CASE("field axioms on random elements of mixed fields") {
  testing::Gen g(7);
  const std::uint64_t fields[] = {1, 3, 4, 8, 12, 5, 24};
  for (int t = 0; t < 150; ++t) {
    const Scalar a = g.cyclotomic(fields[g.uniform(0, 6)], 3);
    const Scalar b = g.cyclotomic(fields[g.uniform(0, 6)], 2);
    const Scalar c = g.cyclotomic(fields[g.uniform(0, 6)], 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(b / a * a == b);
      CHECK(a.pow(-3) * a.pow(3) == Scalar(1));
    }
  }
}

TEST_CASE("embedding into a larger field preserves the value") {
  testing::Gen g(3);
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.uniform(1, 12));
    const std::uint64_t m = n * static_cast<std::uint64_t>(g.uniform(1, 4));
    const Scalar a = g.cyclotomic(n, 3);
    const Scalar b = g.cyclotomic(n, 2);
    const Scalar big = a.in_field(m);
    CHECK(big.field_order() == m);
    CHECK(big == a);
    CHECK((a * b).in_field(m) == big * b.in_field(m));
    CHECK((a + b).in_field(m) == big + b.in_field(m));
  }
  const Scalar mixed[] = {z(4), z(6), Scalar(2)};
  const auto co = coerce(mixed);
  for (const auto& s : co) CHECK(s.field_order() == 12);
  CHECK(co[0] == z(12, 3));
}

TEST_CASE("rational detection") {
  CHECK(Scalar(Rational(5, 3)).is_rational());
  CHECK((z(3) + z(3, 2)).is_rational());
  CHECK_FALSE(z(3).is_rational());
  CHECK((z(3) + z(3, 2)).to_rational() == -1);
  CHECK_THROWS_AS(z(5).to_rational(), DomainError);
}

TEST_CASE("inverse of zero") { CHECK_THROWS_AS(Scalar().inverse(), DomainError); }

TEST_CASE("field order ceiling") {
  FieldCap cap(60);
  CHECK(common_field_order(4, 6) == 12);
  CHECK_THROWS_AS(z(7) * z(11), FieldOrderError);
  CHECK_THROWS_AS(parse_scalar("z61"), ParseError);
  CHECK_NOTHROW(z(5) * z(12));
}

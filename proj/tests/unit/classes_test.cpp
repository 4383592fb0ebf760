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

#include <algorithm>

#include "../support/oracles.hpp"
#include "dsforge/classes.hpp"
#include "dsforge/closure.hpp"

using namespace dsforge;

namespace {

Scalar z(std::uint64_t n, std::int64_t k = 1) { return Scalar::root_of_unity(n, k); }

JordanForm random_jordan(testing::Gen& g, int max_blocks) {
  JordanForm j;
  const int nb = static_cast<int>(g.uniform(1, max_blocks));
  for (int b = 0; b < nb; ++b) {
    j.blocks.push_back({z(6, g.uniform(0, 2)), g.uniform(1, 3), g.uniform(1, 2)});
  }
  return j;
}

}  // namespace

TEST_CASE("class from a Jordan form") {
  const JordanForm j2{{{Scalar(0), 2, 1}}};
  auto c = class_from_jordan(j2);
  CHECK(c.type_row == std::vector<Scalar>{0, 0});
  CHECK(c.dims == std::vector<std::int64_t>{2, 1});

  const JordanForm diag{{{Scalar(1), 1, 2}, {Scalar(-1), 1, 1}}};
  c = class_from_jordan(diag);
  CHECK(c.type_row == std::vector<Scalar>{1, -1});
  CHECK(c.dims == std::vector<std::int64_t>{3, 1});

  c = class_from_jordan(diag, std::vector<Scalar>{-1, 1, z(3)});
  CHECK(c.dims == std::vector<std::int64_t>{3, 2, 0});

  CHECK_THROWS_AS(class_from_jordan(j2, std::vector<Scalar>{0, 1}), DomainError);
  CHECK_THROWS_AS(class_from_jordan(JordanForm{{{Scalar(0), 0, 1}}}), DomainError);
}

TEST_CASE("Jordan form queries") {
  const JordanForm j{{{Scalar(2), 1, 1}, {Scalar(0), 3, 1}, {Scalar(0), 1, 2}}};
  CHECK(j.dimension() == 6);
  CHECK(j.partition(Scalar(0)) == std::vector<std::int64_t>{3, 1, 1});
  CHECK(j.eigenvalues() == std::vector<Scalar>{2, 0});
  CHECK(j.rank_of_power(Scalar(0), 1) == 3);
  CHECK(j.rank_of_power(Scalar(0), 2) == 2);
  CHECK(j.rank_of_power(Scalar(0), 5) == 1);
  CHECK(j.rank_of_power(Scalar(7), 1) == 6);
  CHECK(same_jordan_form(j, JordanForm{{{Scalar(0), 1, 1}, {Scalar(2), 1, 1}, {Scalar(0), 1, 1}, {Scalar(0), 3, 1}}}));
  CHECK_FALSE(same_jordan_form(j, JordanForm{{{Scalar(2), 1, 1}, {Scalar(0), 2, 1}, {Scalar(0), 2, 1}, {Scalar(0), 1, 1}}}));
}

TEST_CASE("Jordan to class to Jordan round trip") {
  testing::Gen g(17);
  for (int t = 0; t < 300; ++t) {
    const JordanForm j = random_jordan(g, 4);
    std::optional<std::vector<Scalar>> row;
    if (g.coin()) {
      auto base = class_from_jordan(j).type_row;
      base.push_back(z(6, g.uniform(0, 5)));
      std::shuffle(base.begin(), base.end(), g.engine());
      row = base;
    }
    const ClassSpec c = class_from_jordan(j, row);
    CHECK(validate_class(c));
    CHECK(same_jordan_form(class_to_jordan(c), j));
  }
}

TEST_CASE("class dims are ranks of partial products") {
  testing::Gen g(23);
  for (int t = 0; t < 60; ++t) {
    const JordanForm j = random_jordan(g, 3);
    const ClassSpec c = class_from_jordan(j);
    const Matrix a = jordan_matrix(j);
    Matrix acc = Matrix::identity(a.rows());
    for (std::size_t l = 0; l < c.type_row.size(); ++l) {
      CHECK(static_cast<std::int64_t>(rank(acc)) == c.dims[l]);
      acc = acc * a.shifted(c.type_row[l]);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("class validation") {
  CHECK(validate_class({{Scalar(1), Scalar(2)}, {3, 1}}));
  auto v = validate_class({{Scalar(1), Scalar(2)}, {3}});
  CHECK_FALSE(v);
  CHECK(v.diagnostics.front() == "dims has 1 entries, eigenvalue row has 2");
  CHECK_FALSE(validate_class({{Scalar(1), Scalar(2)}, {1, 2}}));
  CHECK_FALSE(validate_class({{}, {}}));
  v = validate_class({{Scalar(0), Scalar(1), Scalar(0)}, {4, 4, 1}});
  CHECK_FALSE(v);
  CHECK(v.diagnostics.front().find("equal eigenvalues at positions 1 and 3") == 0);
  CHECK_THROWS_AS(class_to_jordan({{Scalar(1)}, {1, 1}}), DomainError);
}

TEST_CASE("reducing a dims sequence") {
  const std::vector<Scalar> row{0, 1, 0};
  CHECK(reduce_sequence({4, 3, 1}, 1, 2, row) == std::vector<std::int64_t>{4, 2, 0});
  CHECK_THROWS_AS(reduce_sequence({4, 3, 1}, 1, 1, row), DomainError);
  CHECK_THROWS_AS(reduce_sequence({4, 3, 1}, 0, 2, row), DomainError);
  CHECK_THROWS_AS(reduce_sequence({4, 3}, 1, 1, row), DomainError);
  CHECK_THROWS_AS(reduce_sequence({4, 0, 0}, 1, 2, row), DomainError);
}

TEST_CASE("eigenvalue bracket") {
  const TypeData t{{{z(4), z(4, 2)}, {z(4), z(4, 2)}, {z(4), z(4, 2)}}};
  const auto e0 = DimVector(1, {{0}, {0}, {0}});
  CHECK(xi_bracket(t, e0) == z(4, 3));
  CHECK(xi_bracket(t, DimVector(1, {{1}, {0}, {0}})) == z(4, 2) * z(4) * z(4));
  CHECK(xi_bracket(t, DimVector(0, {{-1}, {0}, {0}})) == z(4) * z(4, 2).inverse());
  CHECK_THROWS_AS(xi_bracket(t, DimVector(1, {{0}})), DomainError);
  testing::Gen g(2);
  const TypeData u{{{z(5), z(5, 3), z(3)}, {z(15, 4), Scalar(1)}, {z(5, 2), z(3, 2)}}};
  const Weights w = u.weights();
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int64_t> fa(w.vertex_count()), fb(w.vertex_count());
    for (auto& x : fa) x = g.uniform(-3, 3);
    for (auto& x : fb) x = g.uniform(-3, 3);
    const auto a = DimVector::from_flat(w, fa), b = DimVector::from_flat(w, fb);
    CHECK(xi_bracket(u, a + b) == xi_bracket(u, a) * xi_bracket(u, b));
  }
}

TEST_CASE("additive bracket") {
  const AdditiveTypeData t{{{Rational(1, 2), Rational(0)}, {Rational(1, 3), Rational(2)}, {Rational(-5, 6), Rational(0)}}};
  const auto e0 = DimVector(1, {{0}, {0}, {0}});
  CHECK(zeta_star(t, e0) == 0);
  CHECK(zeta_star_is_integer(t, e0));
  const auto a = DimVector(2, {{1}, {1}, {1}});
  CHECK(zeta_star(t, a) == Rational(1, 2) + Rational(1, 3) + 2 - Rational(5, 6));
  CHECK(zeta_star(t, a + e0) == zeta_star(t, a) + zeta_star(t, e0));
  CHECK_FALSE(zeta_star_is_integer(t, DimVector(1, {{1}, {0}, {0}})));
}

TEST_CASE("arm dims") {
  const DimVector a(3, {{2, 1}, {1}});
  CHECK(arm_dims(a, 0) == std::vector<std::int64_t>{3, 2, 1});
  CHECK(arm_dims(a, 1) == std::vector<std::int64_t>{3, 1});
}

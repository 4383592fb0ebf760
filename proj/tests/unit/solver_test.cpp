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
#include "dsforge/solver.hpp"

using namespace dsforge;

namespace {

Scalar z(std::uint64_t n, std::int64_t k = 1) { return Scalar::root_of_unity(n, k); }

ClassSpec semisimple(std::vector<Scalar> eig) {
  JordanForm j;
  for (auto& e : eig) j.blocks.push_back({e, 1, 1});
  return class_from_jordan(j);
}

std::set<std::vector<testing::Flat>> as_set(const std::vector<Decomposition>& ds) {
  std::set<std::vector<testing::Flat>> out;
  for (const auto& d : ds) {
    std::vector<testing::Flat> parts;
    for (const auto& b : d) parts.push_back(b.flat());
    out.insert(parts);
  }
  return out;
}

Problem generic_problem(const Weights& w, const DimVector& a) {
  const GenericXi g = generic_xi(w, a, a);
  return Problem::from_type(g.type, a);
}

}  // namespace

TEST_CASE("problems from classes") {
  const auto p = Problem::from_classes({semisimple({1, -1}), semisimple({z(3), z(3, 2)}), semisimple({1, 1})});
  CHECK(p.weights == Weights({2, 2, 1}));
  CHECK(p.alpha == DimVector(2, {{1}, {1}, {}}));
  CHECK(p.type.rows[1] == std::vector<Scalar>{z(3), z(3, 2)});
  CHECK_THROWS_WITH_AS(Problem::from_classes({semisimple({1, -1}), semisimple({1})}),
                       "class 2 has size 1, class 1 has size 2", DomainError);
  CHECK_THROWS_AS(Problem::from_classes({}), DomainError);
  CHECK_THROWS_AS(Problem::from_classes({ClassSpec{{Scalar(1)}, {1, 1}}}), DomainError);
  CHECK_THROWS_AS(p.additive_type(), DomainError);
  const auto q = Problem::from_type(TypeData{{{Scalar(0), Scalar(1)}}}, DimVector(3, {{1}}));
  CHECK(q.classes[0].dims == std::vector<std::int64_t>{3, 1});
  CHECK(q.additive_type().rows[0][1] == 1);
  CHECK(to_string(DecompositionMode::AdditiveInteger) == "additive-integer");
}

TEST_CASE("decompositions agree with brute force") {
  testing::Gen g(83);
  const Weights shapes[] = {Weights({2, 2, 2}), Weights({3, 3, 2}), Weights({2, 2, 2, 2})};
  for (int trial = 0; trial < 30; ++trial) {
    const Weights& w = shapes[trial % 3];
    TypeData t;
    for (int i = 0; i < w.k(); ++i) {
      std::vector<Scalar> row;
      for (int j = 0; j < w.w(i); ++j) row.push_back(g.root_of_unity(g.coin() ? 2 : 3));
      t.rows.push_back(row);
    }
    std::vector<std::int64_t> flat(w.vertex_count());
    flat[0] = g.uniform(1, 3);
    for (std::size_t i = 1; i < flat.size(); ++i) flat[i] = g.uniform(0, flat[0]);
    const auto alpha = DimVector::from_flat(w, flat);
    const bool proper = g.coin();
    SearchLimits lim;
    lim.max_results = 1'000'000;
    lim.proper_only = proper;
    const auto found = decompose(w, alpha, [&](const ClassifiedRoot& cr) { return xi_bracket(t, cr.root).is_one(); }, lim);
    CHECK_FALSE(found.limit_reached);
    const auto oracle = testing::brute_force_decompositions(
        w, alpha, [&](const DimVector& b) { return xi_bracket(t, b).is_one(); }, proper);
    CAPTURE(alpha.to_string());
    CHECK(as_set(found.results) == oracle);
    CHECK(found.results.size() == oracle.size());
    for (const auto& d : found.results) {
      CHECK(verify_decomposition(w, alpha, d, [&](const ClassifiedRoot& cr) { return xi_bracket(t, cr.root).is_one(); }));
    }
  }
}

TEST_CASE("decomposition budgets") {
  const Weights w({2, 2, 2});
  const auto alpha = DimVector(2, {{1}, {1}, {1}});
  auto any = [](const ClassifiedRoot&) { return true; };
  SearchLimits one;
  one.max_results = 1;
  const auto r1 = decompose(w, alpha, any, one);
  CHECK(r1.results.size() == 1);
  CHECK(r1.limit_reached);
  CHECK(r1.results.front() == Decomposition{alpha});
  SearchLimits tiny;
  tiny.max_nodes = 1;
  const auto r2 = decompose(w, alpha, any, tiny);
  CHECK(r2.limit_reached);
  CHECK(r2.results.empty());
  const auto all = decompose(w, alpha, any);
  CHECK_FALSE(all.limit_reached);
  CHECK(all.results.size() > 10);
  CHECK(decompose(w, DimVector::zero(w), any).results.empty());
  CHECK_THROWS_AS(decompose(w, -alpha, any), DomainError);
}

TEST_CASE("verify decomposition rejects bad input") {
  const Weights w({2, 2, 2});
  auto any = [](const ClassifiedRoot&) { return true; };
  const auto alpha = DimVector(2, {{1}, {1}, {1}});
  const auto e0 = DimVector::unit(w, Vertex::center());
  CHECK(verify_decomposition(w, alpha, {DimVector(1, {{1}, {1}, {1}}), e0}, any));
  CHECK_FALSE(verify_decomposition(w, alpha, {DimVector(1, {{1}, {1}, {1}})}, any));
  CHECK_FALSE(verify_decomposition(w, alpha, {DimVector(2, {{1}, {1}, {0}}), DimVector(0, {{0}, {0}, {1}})}, any));
  CHECK_FALSE(verify_decomposition(w, alpha, {alpha}, [](const ClassifiedRoot&) { return false; }));
}

TEST_CASE("multiplicative closure decisions") {
  const Weights w({2, 2, 2});
  const auto alpha = DimVector(2, {{1}, {1}, {1}});
  const Problem yes = generic_problem(w, alpha);
  const Verdict v = decide_closure_multiplicative(yes);
  CHECK(v.yes);
  CHECK(v.clause == "alpha is a sum of positive roots with bracket 1");
  REQUIRE(v.solution);
  CHECK(verify_solution(v.solution->mats(), yes, CheckMode::Exact).ok);

  auto rows = yes.type.rows;
  rows[0][0] = rows[0][0] * z(11);
  const Problem no = Problem::from_type(TypeData{rows}, alpha);
  const Verdict n = decide_closure_multiplicative(no);
  CHECK_FALSE(n.yes);
  CHECK_FALSE(n.undetermined);
  CHECK(n.clause == "alpha is not a sum of positive roots with bracket 1");
  REQUIRE_FALSE(n.notes.empty());
  CHECK(n.notes.front().find("determinant condition fails") == 0);

  // Scalar classes: the identity is a solution.
  const Problem scalars = Problem::from_classes({semisimple({1, 1}), semisimple({1, 1})});
  const Verdict s = decide_closure_multiplicative(scalars);
  CHECK(s.yes);
  REQUIRE(s.solution);
  CHECK(verify_solution(s.solution->mats(), scalars, CheckMode::Closure).ok);
}

TEST_CASE("additive closure decisions") {
  JordanForm j2{{{Scalar(0), 2, 1}}};
  const Problem p = Problem::from_classes({class_from_jordan(j2), class_from_jordan(j2)});
  const Verdict v = decide_closure_additive(p);
  CHECK(v.yes);
  CHECK(v.clause == "alpha is a sum of positive roots with zeta*[beta] = 0");
  CHECK(verify_decomposition(p.weights, p.alpha, v.decomposition, admissibility(p, DecompositionMode::AdditiveZero)));

  const Problem q = Problem::from_classes({semisimple({1, 1}), semisimple({Rational(1, 2), Rational(1, 2)})});
  const Verdict n = decide_closure_additive(q);
  CHECK_FALSE(n.yes);
  CHECK(n.notes.front() == "trace condition fails: zeta*[alpha] = 3");
  const Verdict i = decide_closure_additive(q, DecompositionMode::AdditiveInteger);
  CHECK_FALSE(i.yes);
  const Problem r = Problem::from_classes({semisimple({1, 1}), semisimple({2, 2})});
  CHECK(decide_closure_additive(r, DecompositionMode::AdditiveInteger).yes);
  CHECK_FALSE(decide_closure_additive(r).yes);
  CHECK_THROWS_AS(decide_closure_additive(r, DecompositionMode::Multiplicative), DomainError);
}

TEST_CASE("rigid membership reasons") {
  const Weights w({2, 2, 2});
  const auto alpha = DimVector(2, {{1}, {1}, {1}});
  const TypeData t = generic_problem(w, alpha).type;
  CHECK(in_S_xi(w, t, DimVector::zero(w)).reason == "zero vector");
  CHECK(in_S_xi(w, t, DimVector(3, {{1}, {1}, {1}})).reason == "not a root");
  CHECK(in_S_xi(w, t, -alpha).reason == "not a positive root");
  CHECK(in_S_xi(w, t, DimVector(0, {{1}, {0}, {0}})).reason == "not strict");
  const auto m = in_S_xi(w, t, alpha);
  CHECK(m.member);
  CHECK(m.reason == "strict real root with bracket 1 and no proper decomposition");
  CHECK(in_S_xi(w, t, DimVector(1, {{0}, {0}, {0}})).reason.find("xi^[alpha] = ") == 0);

  const Weights e6({3, 3, 3});
  const TypeData ones{{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}};
  CHECK(in_S_xi(e6, ones, DimVector(3, {{2, 1}, {2, 1}, {2, 1}})).reason == "not a real root");

  const TypeData trivial{{{1, 1}, {1, 1}, {1, 1}}};
  const auto d = in_S_xi(w, trivial, alpha);
  CHECK_FALSE(d.member);
  CHECK(d.reason.find("decomposes as ") == 0);
  CHECK(verify_decomposition(w, alpha, d.witness, [](const ClassifiedRoot&) { return true; }));
  const Verdict v = decide_rigid(Problem::from_type(trivial, alpha));
  CHECK_FALSE(v.yes);
  CHECK(v.decomposition == d.witness);
}

TEST_CASE("rigid construction") {
  struct Case {
    Weights w;
    DimVector a;
    int convolutions;
  };
  const Case cases[] = {
      {Weights({2, 2, 2}), DimVector(1, {{0}, {0}, {0}}), 0},
      {Weights({2, 2, 2}), DimVector(2, {{1}, {1}, {1}}), 1},
      {Weights({3, 3, 2}), DimVector(3, {{2, 1}, {2, 1}, {1}}), 2},
      {Weights({3, 2, 2}), DimVector(2, {{2, 1}, {1}, {1}}), 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.a.to_string());
    const Problem p = generic_problem(c.w, c.a);
    const RigidConstruction a = construct_rigid(p);
    CHECK(a.convolutions == c.convolutions);
    CHECK(verify_solution(a.rep.mats(), p, CheckMode::Exact).ok);
    const auto n = static_cast<std::size_t>(c.a.a0());
    CHECK(generated_algebra_dim(a.rep.mats(), n) == n * n);
    const RigidConstruction b = construct_rigid(p, VertexOrder::ArmsFirst);
    CHECK(verify_solution(b.rep.mats(), p, CheckMode::Exact).ok);
    CHECK(hom_space(a.rep.mats(), b.rep.mats()).isomorphic == IsoResult::Isomorphic);
    DimVector down = c.a;
    for (const auto v : a.steps) down = reflect(c.w, v, down);
    CHECK(down == DimVector::unit(c.w, Vertex::center()));
  }
  const TypeData trivial{{{1, 1}, {1, 1}, {1, 1}}};
  CHECK_THROWS_AS(construct_rigid(Problem::from_type(trivial, DimVector(2, {{1}, {1}, {1}}))), DomainError);
}

TEST_CASE("solution checks report the first failure") {
  const Problem p = Problem::from_classes({semisimple({1, -1}), semisimple({1, -1})});
  const Matrix swap(2, 2, {0, 1, 1, 0});
  const Matrix good[] = {swap, swap};
  CHECK(verify_solution(good, p, CheckMode::Exact).ok);
  const Matrix ident[] = {Matrix::identity(2), Matrix::identity(2)};
  auto c = verify_solution(ident, p, CheckMode::Exact);
  CHECK_FALSE(c.ok);
  CHECK(c.product_ok);
  CHECK(c.first_failure == "class 1: rank sequence (2,0)");
  c = verify_solution(ident, p, CheckMode::Closure);
  CHECK_FALSE(c.ok);
  CHECK(c.classes[0].detail == "a rank inequality rank (B - l)^m <= rank (A - l)^m fails");
  const Matrix diag[] = {Matrix::diagonal(std::vector<Scalar>{1, -1}), Matrix::identity(2)};
  c = verify_solution(diag, p, CheckMode::Closure);
  CHECK_FALSE(c.product_ok);
  CHECK(c.first_failure == "product A_1...A_k is not the identity");
  const Matrix one[] = {swap};
  CHECK(verify_solution(one, p, CheckMode::Exact).first_failure == "expected 2 matrices, got 1");
  const Matrix small[] = {Matrix::identity(1), Matrix::identity(1)};
  CHECK(verify_solution(small, p, CheckMode::Exact).first_failure == "matrix 1 is not 2x2");
}

TEST_CASE("conjecture condition") {
  const Weights w({2, 2, 2});
  const auto alpha = DimVector(2, {{1}, {1}, {1}});
  const auto r = conjecture_condition(generic_problem(w, alpha));
  CHECK(std::string(ConjectureReport::label) == "CONJECTURAL");
  CHECK(r.holds);
  CHECK(r.positive_root);
  CHECK(r.bracket_one);
  CHECK(r.p_alpha == 0);
  const TypeData trivial{{{1, 1}, {1, 1}, {1, 1}}};
  const auto v = conjecture_condition(Problem::from_type(trivial, alpha));
  CHECK_FALSE(v.holds);
  REQUIRE(v.violation);
  std::int64_t sum = 0;
  for (const auto& b : *v.violation) sum += p_value(w, b);
  CHECK(v.p_alpha <= sum);
  const auto nr = conjecture_condition(Problem::from_type(trivial, DimVector(3, {{1}, {1}, {1}})));
  CHECK_FALSE(nr.positive_root);
  CHECK_FALSE(nr.holds);
}

TEST_CASE("generic eigenvalues") {
  const Weights w({2, 2, 2});
  const auto a = DimVector(2, {{1}, {1}, {1}});
  const GenericXi g = generic_xi(w, a, 3 * a);
  CHECK(xi_bracket(g.type, a).is_one());
  CHECK(verify_generic(w, a, g));
  CHECK(g.multiples == std::vector<DimVector>{a, 2 * a, 3 * a});
  CHECK(g.points_checked == 7 * 4 * 4 * 4);
  CHECK_THROWS_AS(generic_xi(w, 2 * a, a), DomainError);
  CHECK_THROWS_AS(generic_xi(w, DimVector::zero(w), a), DomainError);
  for (const auto& row : g.exponents) {
    for (auto e : row) {
      CHECK(e >= 0);
      CHECK(e < g.order);
    }
  }
  GenericXi tampered = g;
  tampered.type.rows[2][0] = tampered.type.rows[2][1];
  CHECK_FALSE(verify_generic(w, a, tampered));
}

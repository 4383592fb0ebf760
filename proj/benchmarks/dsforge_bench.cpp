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

#include <benchmark/benchmark.h>

#include "dsforge/solver.hpp"

using namespace dsforge;

namespace {

void BM_ScalarMultiply(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  Scalar a, b;
  for (std::int64_t k = 0; k < 4; ++k) {
    a += Scalar(k + 1) * Scalar::root_of_unity(n, k);
    b += Scalar(2 - k) * Scalar::root_of_unity(n, 3 * k + 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMultiply)->Arg(12)->Arg(24)->Arg(60);

void BM_Classify(benchmark::State& state) {
  const Weights w({6, 3, 2});
  const DimVector v(6, {{5, 4, 3, 2, 1}, {4, 2}, {3}});
  for (auto _ : state) benchmark::DoNotOptimize(classify(w, v));
}
BENCHMARK(BM_Classify);

Problem rigid_problem(const Weights& w, const DimVector& a) {
  return Problem::from_type(generic_xi(w, a, a).type, a);
}

void BM_Convolve(benchmark::State& state) {
  const Weights w({3, 3, 2});
  const DimVector a(3, {{2, 1}, {2, 1}, {1}});
  const Problem p = rigid_problem(w, a);
  const RigidConstruction rc = construct_rigid(p);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(rc.rep, p.type));
}
BENCHMARK(BM_Convolve)->Unit(benchmark::kMillisecond);

void BM_ConstructRigid(benchmark::State& state) {
  const Weights w({2, 2, 2});
  const DimVector a(2, {{1}, {1}, {1}});
  const Problem p = rigid_problem(w, a);
  for (auto _ : state) benchmark::DoNotOptimize(construct_rigid(p));
}
BENCHMARK(BM_ConstructRigid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

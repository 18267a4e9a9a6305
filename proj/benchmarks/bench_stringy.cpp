/*
   Copyright 2026 The stringy authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "stringy/catalog.hpp"
#include "stringy/dcc.hpp"
#include "stringy/laurent.hpp"
#include "stringy/stringy.hpp"

namespace {

using namespace stringy;

void BM_GeometricTermProduct(benchmark::State& state) {
  const Rational a(1, static_cast<long>(state.range(0)));
  const Rational b(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_term(a) * geometric_term(b));
  }
}
BENCHMARK(BM_GeometricTermProduct)->Arg(2)->Arg(6)->Arg(12);

void BM_StringyLocalE8(benchmark::State& state) {
  const ResolutionGraph g = dynkin("E", 8);
  const QuotientGraph q = quotient(g, GraphAction::trivial(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stringy_local(q));
  }
}
BENCHMARK(BM_StringyLocalE8);

void BM_BatyrevStrataE8(benchmark::State& state) {
  const ResolutionGraph g = dynkin("E", 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(batyrev_snc(local_strata(g)));
  }
}
BENCHMARK(BM_BatyrevStrataE8);

void BM_TowerE7(benchmark::State& state) {
  const TowerSpec tower{"E7", "E6:Z2", "D4:S3", "A0:BO"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_tower(tower));
  }
}
BENCHMARK(BM_TowerE7);

void BM_Compare(benchmark::State& state) {
  const MotiveValue f = parse_motive("(L^(1/2) + 1)/(L^(3/2) - 1)");
  const MotiveValue g = parse_motive("1/(L + 1)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(f, g));
  }
}
BENCHMARK(BM_Compare);

void BM_Enumerate(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto v = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_space(r, v));
  }
}
BENCHMARK(BM_Enumerate)->Args({1, 4})->Args({2, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The metasym Authors
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

#include "metasym/partition.hpp"
#include "metasym/schur.hpp"
#include "metasym/symsq.hpp"

namespace {

void BM_SchurJacobiTrudi(benchmark::State& state) {
  metasym::Partition lambda({4, 3, 2, 1});
  std::vector<metasym::Rational> values;
  for (long i = 0; i < state.range(0); ++i) values.emplace_back(i + 2);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::schur_jt(lambda, values));
}
BENCHMARK(BM_SchurJacobiTrudi)->Arg(4)->Arg(6);

void BM_UnramifiedZeta(benchmark::State& state) {
  std::vector<metasym::Rational> alphas;
  for (long i = 0; i < state.range(0); ++i) alphas.emplace_back(i + 2);
  metasym::SatakeData sat(alphas, 5, metasym::Rational(4));
  metasym::ChiSquareRoot root(4);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::unramified_zeta_series(sat, root, 8));
}
BENCHMARK(BM_UnramifiedZeta)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

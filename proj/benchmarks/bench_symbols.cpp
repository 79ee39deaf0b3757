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

#include "metasym/local_arith.hpp"
#include "metasym/weil_index.hpp"

namespace {

void BM_Hilbert(benchmark::State& state) {
  metasym::LocalPlace v = metasym::LocalPlace::finite(state.range(0));
  metasym::Rational a(12), b(-45);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::hilbert(a, b, v));
}
BENCHMARK(BM_Hilbert)->Arg(2)->Arg(3)->Arg(5)->Arg(101);

void BM_WeilIndex(benchmark::State& state) {
  metasym::AdditiveCharacter psi(metasym::LocalPlace::finite(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::gamma(psi));
}
BENCHMARK(BM_WeilIndex)->Arg(3)->Arg(7)->Arg(11);

}  // namespace

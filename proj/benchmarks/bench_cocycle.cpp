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

#include "metasym/cocycle.hpp"
#include "metasym/structured_element.hpp"
#include "metasym/weil_rep.hpp"

namespace {

using metasym::StructuredElement;

void BM_SigmaTorus(benchmark::State& state) {
  std::vector<metasym::Rational> a, b;
  for (long i = 0; i < state.range(0); ++i) {
    a.emplace_back(2 * i + 3);
    b.emplace_back(3 * i + 5);
  }
  auto g = StructuredElement::torus(a);
  auto h = StructuredElement::torus(b);
  auto v = metasym::LocalPlace::finite(3);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::sigma_eval(g, h, v));
}
BENCHMARK(BM_SigmaTorus)->Arg(2)->Arg(4)->Arg(8);

void BM_SigmaGl2(benchmark::State& state) {
  auto g = StructuredElement::block_diagonal({StructuredElement::gl2(1, 2, 3, 4), StructuredElement::torus({5})});
  auto h = StructuredElement::block_diagonal({StructuredElement::gl2(0, 1, -6, 5), StructuredElement::torus({7})});
  auto v = metasym::LocalPlace::finite(5);
  for (auto _ : state) benchmark::DoNotOptimize(metasym::sigma_eval(g, h, v));
}
BENCHMARK(BM_SigmaGl2);

void BM_WeilMultiplier(benchmark::State& state) {
  metasym::FiniteWeilModel model(3, static_cast<int>(state.range(0)));
  metasym::Matrix g{{0, 1}, {-1, 0}};
  metasym::Matrix h{{1, 1}, {0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(metasym::projective_multiplier(model, g, h));
}
BENCHMARK(BM_WeilMultiplier)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

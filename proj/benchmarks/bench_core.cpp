// Copyright 2026 The revsurf Authors.
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

#include "revsurf/curvature.hpp"
#include "revsurf/embeddability.hpp"
#include "revsurf/embedding.hpp"
#include "revsurf/expression.hpp"
#include "revsurf/profile.hpp"

namespace {

using namespace revsurf;

void BM_JetEval(benchmark::State& state) {
  const Expression e = parse_expression("sin(s)*(1+0.5*sin(s)^2)");
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval_jet3(s));
    s = s < 3.0 ? s + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_JetEval);

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expression("sin(s)*(1-0.25*sin(s)^2+0.1*cos(s)^3)"));
  }
}
BENCHMARK(BM_Parse);

void BM_TotalCurvature(benchmark::State& state) {
  const Profile p = make_preset("dumbbell:0.25");
  for (auto _ : state) benchmark::DoNotOptimize(total_curvature(p));
}
BENCHMARK(BM_TotalCurvature);

void BM_FullReport(benchmark::State& state) {
  const Profile p = make_preset("dumbbell:0.25");
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_report(p, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FullReport)->Arg(1024)->Arg(4096)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EmbeddingMap(benchmark::State& state) {
  const Profile p = make_preset("dumbbell:0.25");
  for (auto _ : state) benchmark::DoNotOptimize(EmbeddingMap(p));
}
BENCHMARK(BM_EmbeddingMap)->Unit(benchmark::kMillisecond);

void BM_GenerateMesh(benchmark::State& state) {
  const EmbeddingMap map(make_preset("dumbbell:0.25"));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_mesh(map, n, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * (n - 1)));
}
BENCHMARK(BM_GenerateMesh)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The sqir Authors
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

#include "sqir/algorithms.h"
#include "sqir/harness.h"
#include "sqir/semantics.h"

namespace {

using namespace sqir;

void BM_ApplyUnitaryGhz(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const UnitaryProgram u = algorithms::ghz(n);
    const Matrix zero = basis_vector(pow2(n), 0);
    for (auto _ : state) benchmark::DoNotOptimize(apply_unitary(u, zero));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyUnitaryGhz)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void BM_UcEvalQft(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const UnitaryProgram u = algorithms::qft(n);
    for (auto _ : state) benchmark::DoNotOptimize(uc_eval(u));
}
BENCHMARK(BM_UcEvalQft)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DensityTeleport(benchmark::State& state) {
    harness::Rng rng(0);
    const Matrix rho = kron(harness::random_density(rng, 2), harness::random_density(rng, 4));
    const Program p = algorithms::teleport();
    for (auto _ : state) benchmark::DoNotOptimize(density_eval(p, rho));
}
BENCHMARK(BM_DensityTeleport);

void BM_NondetTeleport(benchmark::State& state) {
    harness::Rng rng(0);
    const Matrix psi = kron(harness::random_state(rng, 2), basis_vector(4, 0));
    const Program p = algorithms::teleport();
    for (auto _ : state) benchmark::DoNotOptimize(nondet_eval(p, psi));
}
BENCHMARK(BM_NondetTeleport);

void BM_GroverSuccess(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    harness::Rng rng(0);
    const auto f = harness::random_function_with_count(rng, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(algorithms::grover_success_prob(n, f, 3));
}
BENCHMARK(BM_GroverSuccess)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CheckTheorem(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(harness::check_theorem("qpe_exact"));
}
BENCHMARK(BM_CheckTheorem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The Entangle Authors
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

#include "entangle/entangle.hpp"

namespace {

using namespace entangle;

void BM_Svd(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    const ComplexMatrix m = ginibre(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SchmidtDecompose(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PureState psi = random_pure_state(n, n, 11);
    for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(psi));
}
BENCHMARK(BM_SchmidtDecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_MakeReport(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PureState psi = random_pure_state(n, n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(make_report(psi));
}
BENCHMARK(BM_MakeReport)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ApplyLgm(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PureState psi = random_pure_state(n, n, 17);
    const LocalMeasurementSet a = random_measurement_set(n, 3, 19);
    const LocalMeasurementSet b = random_measurement_set(n, 3, 23);
    for (auto _ : state) benchmark::DoNotOptimize(apply_lgm(psi, a, b));
}
BENCHMARK(BM_ApplyLgm)->Arg(2)->Arg(4)->Arg(8);

void BM_HermitianEig(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PureState psi = random_pure_state(n, n, 29);
    const ComplexMatrix rho = reduced_density_matrix(psi, Subsystem::kA);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(rho));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

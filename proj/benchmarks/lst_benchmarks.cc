// Copyright 2026 The LST Authors
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

#include <random>
#include <vector>

#include "lst/affine_trace.h"
#include "lst/clifford.h"
#include "lst/code.h"
#include "lst/estimator.h"
#include "lst/shadow.h"
#include "lst/tableau.h"

namespace {

using namespace lst;

std::vector<PauliOp> random_stabilizer_group(std::size_t n, Rng& rng) {
    const CliffordElement encoder = sample_uniform_clifford(n, rng);
    std::vector<PauliOp> generators;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        PauliOp z(n);
        z.set_pauli(j, 'Z');
        generators.push_back(encoder.conjugate(z));
    }
    return generators;
}

void BM_Project(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const auto generators = random_stabilizer_group(n, rng);
    Tableau input = Tableau::zero_state(n);
    apply_clifford(input, sample_uniform_clifford(n, rng), 0);
    for (auto _ : state) {
        state.PauseTiming();
        Tableau t = input;
        state.ResumeTiming();
        benchmark::DoNotOptimize(t.project(generators));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Project)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_Conjugate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const CliffordElement u = sample_uniform_clifford(n, rng);
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_pauli(q, "IXYZ"[rng() % 4]);
    for (auto _ : state) benchmark::DoNotOptimize(u.conjugate(p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Conjugate)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);

void BM_SampleClifford(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_clifford(n, rng));
}
BENCHMARK(BM_SampleClifford)->RangeMultiplier(2)->Range(1, 64);

void BM_AcquireShot(benchmark::State& state) {
    ShadowAcquirer acq(five_qubit_code(), static_cast<std::size_t>(state.range(0)),
                       ghz_prep(static_cast<std::size_t>(state.range(0))), {0.01, 4});
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(acq.acquire(i++));
}
BENCHMARK(BM_AcquireShot)->DenseRange(1, 4);

void BM_AffineTrace(benchmark::State& state) {
    const std::size_t n = 5;
    const std::size_t count = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    std::vector<AffinePauliFactor> factors;
    for (std::size_t j = 0; j < count; ++j) {
        PauliOp op(n);
        for (std::size_t q = 0; q < n; ++q) op.set_pauli(q, "IXYZ"[rng() % 4]);
        factors.push_back({0.5, 0.5, op});
    }
    for (auto _ : state) benchmark::DoNotOptimize(affine_product_trace_complex(n, factors));
}
BENCHMARK(BM_AffineTrace)->DenseRange(4, 20, 4);

void BM_FastTraceFiveQubit(benchmark::State& state) {
    const StabilizerCode code = five_qubit_code();
    ShadowAcquirer acq(code, 1, zero_prep(1), {0.05, 6});
    const Snapshot s = acq.acquire(0);
    const PauliSum obs = lift_observable(code, fidelity_observable(zero_prep(1)));
    for (auto _ : state) benchmark::DoNotOptimize(fast_projected_trace(s, code, obs));
}
BENCHMARK(BM_FastTraceFiveQubit);

void BM_PairTraceFiveQubit(benchmark::State& state) {
    const StabilizerCode code = five_qubit_code();
    ShadowAcquirer acq(code, 1, zero_prep(1), {0.05, 7});
    const std::vector<Snapshot> pair{acq.acquire(0), acq.acquire(1)};
    const PauliSum obs = lift_observable(code, fidelity_observable(zero_prep(1)));
    for (auto _ : state) benchmark::DoNotOptimize(tuple_projected_trace(pair, code, obs));
}
BENCHMARK(BM_PairTraceFiveQubit);

}  // namespace
BENCHMARK_MAIN();

// Copyright 2026 The udisc Authors
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

#include "udisc/angmom.hpp"
#include "udisc/discriminator.hpp"
#include "udisc/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace udisc;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

void BM_ClebschGordan(benchmark::State& state) {
    const int tj = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(clebsch_gordan(h(tj), h(tj % 2), h(tj), h(-(tj % 2)), h(tj), h(0)));
    }
}
BENCHMARK(BM_ClebschGordan)->Arg(4)->Arg(16)->Arg(64);

void BM_Wigner6j(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // The recoupling symbol behind the Jordan overlaps of the (n, n, n) configuration.
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_6j(h(n), h(n), h(2 * n), h(n), h(3 * n - 2), h(2 * n)));
    }
}
BENCHMARK(BM_Wigner6j)->Arg(4)->Arg(16)->Arg(64);

void BM_BlockExpectation(benchmark::State& state) {
    const int u = static_cast<int>(state.range(0));
    double beta = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_expectation(u, u, u / 2, beta));
        beta = beta < 3.0 ? beta + 1e-3 : 0.3;
    }
}
BENCHMARK(BM_BlockExpectation)->Arg(4)->Arg(16)->Arg(64);

void BM_BlockExpectationLemma(benchmark::State& state) {
    const int u = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(block_expectation_lemma(u, u, u / 2, 1.1));
}
BENCHMARK(BM_BlockExpectationLemma)->Arg(4)->Arg(16);

void BM_Psp(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto config = CopyConfig::make(m, m, m, 2);
    const Priors priors = Priors::from_eta1(0.4);
    const auto blocks = optimal_q(config, priors);
    double s = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psp_with_blocks(config, priors, blocks, Overlap::from_s(s)).total);
        s = s < 0.9 ? s + 1e-3 : 0.1;
    }
}
BENCHMARK(BM_Psp)->Arg(2)->Arg(8)->Arg(32);

void BM_CoupledBasis(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto config = CopyConfig::make(m, m, m, 2);
    for (auto _ : state) benchmark::DoNotOptimize(coupled_basis(config, Scheme::Side1).size());
}
BENCHMARK(BM_CoupledBasis)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildPovm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto config = CopyConfig::make(m, m, m, 2);
    const Priors priors = Priors::from_eta1(0.5);
    const auto blocks = optimal_q(config, priors);
    for (auto _ : state) benchmark::DoNotOptimize(build_povm(config, priors, blocks).pi1.rows());
}
BENCHMARK(BM_BuildPovm)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

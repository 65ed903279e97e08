// Copyright 2026 The graylap Authors
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

// OpenMP kernels against the serial reference, plus whole-circuit runs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "graylap/builders.hpp"
#include "graylap/kernels.hpp"
#include "graylap/simulator.hpp"

namespace {

using graylap::Complex;
namespace kernels = graylap::kernels;

std::vector<Complex> make_state(int n) {
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = std::polar(1.0, 0.1 * static_cast<double>(i));
    }
    return amps;
}

const graylap::Mat2 kRot{Complex{std::cos(0.3)}, Complex{0, std::sin(0.3)}, Complex{0, std::sin(0.3)},
                         Complex{std::cos(0.3)}};

void BM_Apply2x2Serial(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = make_state(n);
    const kernels::Controls ctrl{0b11, 0b01};
    for (auto _ : state) {
        kernels::serial::apply_2x2(amps, n - 1, kRot, ctrl);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_Apply2x2Omp(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = make_state(n);
    const kernels::Controls ctrl{0b11, 0b01};
    for (auto _ : state) {
        kernels::omp::apply_2x2(amps, n - 1, kRot, ctrl);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_DiagonalSerial(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = make_state(n);
    const std::vector<int> qubits{0, 1, 2};
    const std::vector<double> phases{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    for (auto _ : state) {
        kernels::serial::apply_diagonal(amps, qubits, phases);
        benchmark::DoNotOptimize(amps.data());
    }
}

void BM_DiagonalOmp(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = make_state(n);
    const std::vector<int> qubits{0, 1, 2};
    const std::vector<double> phases{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    for (auto _ : state) {
        kernels::omp::apply_diagonal(amps, qubits, phases);
        benchmark::DoNotOptimize(amps.data());
    }
}

void BM_BrgcStep(benchmark::State &state, kernels::Backend backend) {
    const int n = static_cast<int>(state.range(0));
    const graylap::Circuit c = graylap::build_brgc_step({n, 0.05});
    auto amps = make_state(c.width());
    for (auto _ : state) {
        for (const auto &g : c.gates()) {
            graylap::apply_gate(amps, g, backend);
        }
        benchmark::DoNotOptimize(amps.data());
    }
}

} // namespace

BENCHMARK(BM_Apply2x2Serial)->DenseRange(10, 22, 4);
BENCHMARK(BM_Apply2x2Omp)->DenseRange(10, 22, 4);
BENCHMARK(BM_DiagonalSerial)->DenseRange(10, 22, 4);
BENCHMARK(BM_DiagonalOmp)->DenseRange(10, 22, 4);
BENCHMARK_CAPTURE(BM_BrgcStep, serial, kernels::Backend::Serial)->DenseRange(6, 12, 2);
BENCHMARK_CAPTURE(BM_BrgcStep, omp, kernels::Backend::OpenMP)->DenseRange(6, 12, 2);

BENCHMARK_MAIN();

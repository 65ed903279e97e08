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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "graylap/kernels.hpp"

namespace graylap::kernels {
namespace {

std::vector<Complex> random_state(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = Complex{g(rng), g(rng)};
    }
    return amps;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

// Row-by-row definition: amplitude pairs differing in the target bit mix
// through m when every control bit matches.
std::vector<Complex> oracle_2x2(const std::vector<Complex> &in, int target, const Mat2 &m, Controls ctrl) {
    std::vector<Complex> out(in.size());
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if ((i & ctrl.mask) != ctrl.value) {
            out[i] = in[i];
            continue;
        }
        const std::size_t i0 = i & ~bit;
        const std::size_t i1 = i | bit;
        out[i] = (i & bit) ? m[2] * in[i0] + m[3] * in[i1] : m[0] * in[i0] + m[1] * in[i1];
    }
    return out;
}

const Mat2 kGeneric{Complex{0.6, 0.1}, Complex{-0.2, 0.7}, Complex{0.3, -0.4}, Complex{0.5, 0.5}};

class KernelSizes : public ::testing::TestWithParam<int> {};

TEST_P(KernelSizes, Apply2x2MatchesOracle) {
    const int n = GetParam();
    const auto base = random_state(n, 17);
    for (int target : {0, n / 2, n - 1}) {
        for (Controls ctrl : {Controls{}, Controls{0b110u & ~(1u << target), 0b010u & ~(1u << target)}}) {
            const auto expected = oracle_2x2(base, target, kGeneric, ctrl);
            auto s = base;
            auto o = base;
            serial::apply_2x2(s, target, kGeneric, ctrl);
            omp::apply_2x2(o, target, kGeneric, ctrl);
            EXPECT_LT(max_diff(s, expected), 1e-14);
            EXPECT_LT(max_diff(o, expected), 1e-14);
        }
    }
}

TEST_P(KernelSizes, SwapMatchesOracle) {
    const int n = GetParam();
    const auto base = random_state(n, 23);
    const int q1 = 0;
    const int q2 = n - 1;
    std::vector<Complex> expected(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::size_t b1 = (i >> q1) & 1u;
        const std::size_t b2 = (i >> q2) & 1u;
        std::size_t j = i & ~((std::size_t{1} << q1) | (std::size_t{1} << q2));
        j |= (b1 << q2) | (b2 << q1);
        expected[j] = base[i];
    }
    auto s = base;
    auto o = base;
    serial::apply_swap(s, q1, q2);
    omp::apply_swap(o, q1, q2);
    EXPECT_EQ(max_diff(s, expected), 0.0);
    EXPECT_EQ(max_diff(o, expected), 0.0);
}

TEST_P(KernelSizes, DiagonalMatchesOracle) {
    const int n = GetParam();
    const auto base = random_state(n, 29);
    const std::vector<int> qubits{n - 1, 0, 1};
    std::vector<double> phases;
    for (int s = 0; s < 8; ++s) {
        phases.push_back(0.3 * s - 1.0);
    }
    std::vector<Complex> expected(base);
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::size_t s = 0;
        for (std::size_t q = 0; q < qubits.size(); ++q) {
            s |= ((i >> qubits[q]) & 1u) << q;
        }
        expected[i] *= std::polar(1.0, phases[s]);
    }
    auto s = base;
    auto o = base;
    serial::apply_diagonal(s, qubits, phases);
    omp::apply_diagonal(o, qubits, phases);
    EXPECT_LT(max_diff(s, expected), 1e-14);
    EXPECT_LT(max_diff(o, expected), 1e-14);
}

// Below and above the parallel threshold.
INSTANTIATE_TEST_SUITE_P(Sizes, KernelSizes, ::testing::Values(3, 6, 13, 14));

TEST(Kernels, ParallelThresholdIsReached) {
    EXPECT_LT(std::size_t{1} << 6, omp::kParallelThreshold);
    EXPECT_GE(std::size_t{1} << 13, omp::kParallelThreshold);
}

} // namespace
} // namespace graylap::kernels

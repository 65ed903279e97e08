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
#include <vector>

#include "graylap/kernels.hpp"

namespace graylap::kernels::omp {

namespace {

// Index with a zero bit spliced in at position `bit_pos`.
inline std::uint64_t insert_zero(std::uint64_t k, int bit_pos) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit_pos) - 1);
    return ((k >> bit_pos) << (bit_pos + 1)) | low;
}

} // namespace

void apply_2x2(std::span<Complex> amps, int target, const Mat2 &m, Controls ctrl) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *a = amps.data();
    // Each k owns the disjoint pair (i0, i1), so iterations never race.
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), target);
        if ((i0 & ctrl.mask) != ctrl.value) {
            continue;
        }
        const std::uint64_t i1 = i0 | bit;
        const Complex a0 = a[i0];
        const Complex a1 = a[i1];
        a[i0] = m[0] * a0 + m[1] * a1;
        a[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_swap(std::span<Complex> amps, int q1, int q2) {
    const int lo = std::min(q1, q2);
    const int hi = std::max(q1, q2);
    const std::uint64_t b1 = std::uint64_t{1} << q1;
    const std::uint64_t b2 = std::uint64_t{1} << q2;
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    Complex *a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < quarter; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        std::swap(a[base | b1], a[base | b2]);
    }
}

void apply_diagonal(std::span<Complex> amps, std::span<const int> qubits, std::span<const double> phases) {
    std::vector<Complex> factor(phases.size());
    for (std::size_t s = 0; s < phases.size(); ++s) {
        factor[s] = std::polar(1.0, phases[s]);
    }
    const auto dim = static_cast<std::int64_t>(amps.size());
    Complex *a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < dim; ++i) {
        std::size_t sub = 0;
        for (std::size_t q = 0; q < qubits.size(); ++q) {
            sub |= static_cast<std::size_t>((static_cast<std::uint64_t>(i) >> qubits[q]) & 1U) << q;
        }
        a[i] *= factor[sub];
    }
}

} // namespace graylap::kernels::omp

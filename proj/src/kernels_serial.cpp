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

namespace graylap::kernels::serial {

void apply_2x2(std::span<Complex> amps, int target, const Mat2 &m, Controls ctrl) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i0 = 0; i0 < amps.size(); ++i0) {
        if ((i0 & bit) != 0 || (i0 & ctrl.mask) != ctrl.value) {
            continue;
        }
        const std::uint64_t i1 = i0 | bit;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_swap(std::span<Complex> amps, int q1, int q2) {
    const std::uint64_t b1 = std::uint64_t{1} << q1;
    const std::uint64_t b2 = std::uint64_t{1} << q2;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & b1) != 0 && (i & b2) == 0) {
            std::swap(amps[i], amps[(i ^ b1) | b2]);
        }
    }
}

void apply_diagonal(std::span<Complex> amps, std::span<const int> qubits, std::span<const double> phases) {
    std::vector<Complex> factor(phases.size());
    for (std::size_t s = 0; s < phases.size(); ++s) {
        factor[s] = std::polar(1.0, phases[s]);
    }
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::size_t sub = 0;
        for (std::size_t q = 0; q < qubits.size(); ++q) {
            sub |= static_cast<std::size_t>((i >> qubits[q]) & 1U) << q;
        }
        amps[i] *= factor[sub];
    }
}

} // namespace graylap::kernels::serial

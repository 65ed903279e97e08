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

/**
 * @file
 * In-place statevector kernels. `omp` splits the amplitude sweep across
 * threads; `serial` is the straight-line reference the tests compare it to.
 * Both take raw amplitude buffers of length 2^n and do no validation.
 */
#pragma once

#include <cstdint>
#include <span>

#include "graylap/qubit_ops.hpp"

namespace graylap::kernels {

/// Control condition: fires when (index & mask) == value.
struct Controls {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

enum class Backend { Serial, OpenMP };

namespace serial {
void apply_2x2(std::span<Complex> amps, int target, const Mat2 &m, Controls ctrl);
void apply_swap(std::span<Complex> amps, int q1, int q2);
/// Multiplies each amplitude by exp(i phases[sub]), where bit i of sub is
/// the value of qubits[i].
void apply_diagonal(std::span<Complex> amps, std::span<const int> qubits, std::span<const double> phases);
} // namespace serial

namespace omp {
/// Below this many amplitudes the loops stay on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

void apply_2x2(std::span<Complex> amps, int target, const Mat2 &m, Controls ctrl);
void apply_swap(std::span<Complex> amps, int q1, int q2);
void apply_diagonal(std::span<Complex> amps, std::span<const int> qubits, std::span<const double> phases);
} // namespace omp

} // namespace graylap::kernels

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

/// @file
/// Statevector simulation and unitary extraction.
#pragma once

#include <span>

#include "graylap/circuit.hpp"
#include "graylap/kernels.hpp"
#include "graylap/numerics.hpp"

namespace graylap {

/// 2x2 matrix acting on the target of a single-target gate.
[[nodiscard]] Mat2 gate_matrix(const Gate &g);

/// Applies one gate to raw amplitudes of a register of matching width.
void apply_gate(std::span<Complex> amps, const Gate &g, kernels::Backend backend = kernels::Backend::OpenMP);

/// Gates applied left to right on a copy of `state`.
[[nodiscard]] StateVector apply(const Circuit &c, const StateVector &state,
                                kernels::Backend backend = kernels::Backend::OpenMP);

/// Column j = apply(c, |j>). Width must be at most 10.
[[nodiscard]] DenseOperator circuit_unitary(const Circuit &c);

struct SystemUnitary {
    /// <s'|<0|U|0>|s> on the system register.
    DenseOperator unitary;
    /// Largest norm of any output component with an ancilla set, over
    /// system basis inputs with ancillas in |0>.
    double ancilla_leak;
};

/// Restriction to ancillas |0> in and out. Simulates only the 2^system
/// inputs, so it works for widths beyond the dense limit.
[[nodiscard]] SystemUnitary system_unitary(const Circuit &c);

} // namespace graylap

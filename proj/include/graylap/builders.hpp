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
 * Circuit builders for one kinetic Trotter step: the ancilla-ladder Gray
 * code step, its multi-controlled reference, the binary Pauli-string step,
 * and the QFT-diagonalized step.
 *
 * Builders work in bit-significance labels and map the system register
 * through `BitLayout` at the end. Ancillas sit at n .. 2n-4.
 */
#pragma once

#include <string_view>

#include "graylap/circuit.hpp"
#include "graylap/encoding.hpp"
#include "graylap/laplacian.hpp"

namespace graylap {

/// How the Toffoli ladder's control polarities and ancilla indices are read.
enum class PolarityConvention {
    /// Corrected map, checked against u1_brgc.
    Resolved,
    /// Literal transcription of the printed listing; correct only for n <= 4.
    AsPrinted,
};

enum class Dispersion {
    /// p^2 / (2M) with p the centred lattice momentum.
    Quadratic,
    /// (2 - 2 cos(2 pi k / N)) / (2 M a^2), the finite-difference spectrum.
    Cosine,
};

[[nodiscard]] std::string_view to_string(PolarityConvention p);
[[nodiscard]] std::string_view to_string(Dispersion d);
[[nodiscard]] Dispersion parse_dispersion(std::string_view text);

struct BuilderConfig {
    int n = 2;
    double lambda = 0.0;
    PolarityConvention polarity = PolarityConvention::Resolved;
    Dispersion dispersion = Dispersion::Quadratic;
    BitOrder order = kDefaultBitOrder;
};

/// Ancilla-ladder circuit for u1_brgc(n, lambda) on 2n-3 qubits (n for n < 4).
[[nodiscard]] Circuit build_brgc_step(const BuilderConfig &cfg);

/// One MCROTX pair per G_k, k = n-1 .. 2, then ROTX on qubits 0 and 1.
[[nodiscard]] Circuit build_brgc_multicontrol_reference(const BuilderConfig &cfg);

/// exp(i lambda c_s P_s) per binary string via basis change and CX parity ladder.
[[nodiscard]] Circuit build_binary_step(int n, double lambda, BitOrder order = kDefaultBitOrder);

/// H / CPHASE ladder plus reversal swaps; unitary F[j,k] = e^{2 pi i jk/N}/sqrt N.
[[nodiscard]] Circuit build_qft(int n);

/// Per-basis-state phases -dt * E_k of the chosen dispersion, k the
/// Fourier index.
[[nodiscard]] std::vector<double> kinetic_phases(const LatticeSpec &spec, double dt, Dispersion dispersion);

/// QFT, DIAGPHASE, inverse QFT, mapped onto the binary position layout.
[[nodiscard]] Circuit build_qft_kinetic_step(const LatticeSpec &spec, double dt, Dispersion dispersion,
                                             BitOrder order = kDefaultBitOrder);

} // namespace graylap

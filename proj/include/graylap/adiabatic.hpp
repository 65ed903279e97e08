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
 * Adiabatic switching of a lattice potential under H(s) = T + f(s) V,
 * stepped with first-order Magnus steps. The exact evolver exponentiates
 * each averaged step generator; the circuit evolvers split it into a
 * potential phase followed by a kinetic circuit.
 *
 * Units: energies in MeV, times in MeV^-1, lengths in fm.
 */
#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graylap/builders.hpp"
#include "graylap/encoding.hpp"
#include "graylap/laplacian.hpp"
#include "graylap/numerics.hpp"

namespace graylap {

enum class PotentialKind { StepWell, Harmonic };

struct Potential {
    PotentialKind kind;
    /// StepWell depth parameter (MeV) or harmonic frequency (MeV).
    double strength;
    /// StepWell box length in fm; unused for Harmonic.
    double length_fm;
    /// Per-site values in MeV, position order.
    std::vector<double> samples;
};

/// +V0 for r a < L/2, -V0 otherwise.
[[nodiscard]] Potential step_well(const LatticeSpec &spec, double v0_mev, double length_fm);
/// M omega^2 x^2 / 2 with x = (r - N/2) a.
[[nodiscard]] Potential harmonic(const LatticeSpec &spec, double omega_mev);

enum class Ramp {
    Constant,
    Linear,
    /// sin^2(pi s / 2)
    Sin2,
    /// sin^2((pi/2) sin^2(pi s / 2)), flat to third order at both ends.
    NestedSin2,
};

[[nodiscard]] std::string_view to_string(Ramp r);
[[nodiscard]] Ramp parse_ramp(std::string_view text);

[[nodiscard]] double ramp_value(Ramp r, double s);
/// Mean of f over [s0, s1]; closed form where one exists, Gauss quadrature otherwise.
[[nodiscard]] double ramp_average(Ramp r, double s0, double s1);

struct Schedule {
    double total_time;
    int steps;
    Ramp ramp = Ramp::NestedSin2;

    [[nodiscard]] double dt() const { return total_time / steps; }
};

/// Diagonal potential permuted into the encoding's basis.
[[nodiscard]] DenseOperator potential_operator(const LatticeSpec &spec, const Potential &pot, CodeKind code,
                                               BitOrder order = kDefaultBitOrder);

/// T_enc + f(s) V_enc.
[[nodiscard]] DenseOperator hamiltonian_at(double s, const LatticeSpec &spec, const Potential &pot, CodeKind code,
                                           Ramp ramp = Ramp::NestedSin2, BitOrder order = kDefaultBitOrder);

/// exp(-i dt (T + fbar V)) for step `step_index`.
[[nodiscard]] DenseOperator magnus1_step_unitary(const LatticeSpec &spec, const Potential &pot,
                                                 const Schedule &schedule, int step_index, CodeKind code,
                                                 BitOrder order = kDefaultBitOrder);

/// Quadratic-dispersion kinetic operator in the binary encoding.
[[nodiscard]] DenseOperator quadratic_kinetic_operator(const LatticeSpec &spec, BitOrder order = kDefaultBitOrder);

enum class Evolver { ExactMagnus, BRGCCircuit, BinaryCircuit, QFTQuadratic };

[[nodiscard]] std::string_view to_string(Evolver e);
[[nodiscard]] Evolver parse_evolver(std::string_view text);

struct TraceRecord {
    int step;
    double time;
    double exp_t;
    double exp_v;
};

struct EvolutionTrace {
    Evolver evolver;
    /// Step 0 (initial state) through `steps`.
    std::vector<TraceRecord> records;
    /// Largest | |psi|^2 - 1 | seen along the run.
    double max_norm_drift = 0.0;
};

/**
 * Runs one evolver. `initial` is given on the system register in position-
 * independent form (the uniform state is the same in every encoding); an
 * empty state means the uniform superposition. `reference_code` picks the
 * basis of the ExactMagnus run.
 */
[[nodiscard]] EvolutionTrace evolve(const LatticeSpec &spec, const Potential &pot, const Schedule &schedule,
                                    Evolver evolver, const std::vector<Complex> &initial = {},
                                    CodeKind reference_code = CodeKind::BRGC, BitOrder order = kDefaultBitOrder);

/// |a - b| / |b|.
[[nodiscard]] double relative_error(double value, double reference);

/// |d<T>| + |d<V>| at the final step.
[[nodiscard]] double trace_deviation(const EvolutionTrace &trace, const EvolutionTrace &reference);

/// ||[T, V]||_2 in MeV^2.
[[nodiscard]] double commutator_TV_norm(const LatticeSpec &spec, const Potential &pot,
                                        CodeKind code = CodeKind::BRGC);

/// Columns step, time_MeVinv, evolver, expT_MeV, expV_MeV.
void write_trace_csv(std::ostream &out, const std::vector<EvolutionTrace> &traces);

[[nodiscard]] nlohmann::json describe(const LatticeSpec &spec, const Potential &pot, const Schedule &schedule);

} // namespace graylap

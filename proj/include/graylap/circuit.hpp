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
 * Gate vocabulary, circuit container, metrics and rewriting passes.
 *
 * Rotation convention: ROTX(t) = exp(i t X) and ROTZ(t) = exp(i t Z), so a
 * factor exp(i l G) maps to gate angles of exactly l. In the usual
 * convention ROTX(t) = RX(-2t).
 *
 * Controlled gates list their controls first and the target last. A
 * control with polarity p fires when the control qubit reads p.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graylap/numerics.hpp"

namespace graylap {

enum class GateKind {
    RotX,
    RotZ,
    H,
    CX,
    CSX,   ///< controlled sqrt(X)
    CSXdg, ///< controlled sqrt(X)^dagger
    CRotX,
    CCX,
    CPhase, ///< diag(1, 1, 1, e^{i t}); symmetric, no polarity
    Swap,
    DiagPhase, ///< exp(i phases[s]) on the listed qubits, bit q of s = qubits[q]
    MCRotX,    ///< ROTX on the target under any number of controls
};

[[nodiscard]] std::string_view to_string(GateKind kind);
[[nodiscard]] GateKind parse_gate_kind(std::string_view text);

struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    std::vector<int> polarities;
    double angle = 0.0;
    std::vector<double> phases;

    [[nodiscard]] static Gate rotx(double theta, int target);
    [[nodiscard]] static Gate rotz(double theta, int target);
    [[nodiscard]] static Gate h(int target);
    [[nodiscard]] static Gate cx(int control, int polarity, int target);
    [[nodiscard]] static Gate csx(int control, int polarity, int target);
    [[nodiscard]] static Gate csxdg(int control, int polarity, int target);
    [[nodiscard]] static Gate crotx(double theta, int control, int polarity, int target);
    [[nodiscard]] static Gate ccx(int c1, int p1, int c2, int p2, int target);
    [[nodiscard]] static Gate cphase(double theta, int control, int target);
    [[nodiscard]] static Gate swap(int q1, int q2);
    [[nodiscard]] static Gate diag_phase(std::vector<int> qubits, std::vector<double> phases);
    [[nodiscard]] static Gate mcrotx(double theta, std::vector<int> controls, std::vector<int> polarities,
                                     int target);

    [[nodiscard]] int target() const { return qubits.back(); }
    /// Number of leading entries of `qubits` that are controls.
    [[nodiscard]] std::size_t n_controls() const;
    [[nodiscard]] std::uint64_t support() const;

    /// Same kind, operands and polarities (angles ignored).
    [[nodiscard]] bool same_operands(const Gate &other) const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Ordered gate list on `width` qubits; qubits [0, system_qubits) are the
/// system register, the rest are ancillas that start and end in |0>.
class Circuit {
  public:
    Circuit(int width, int system_qubits);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int system_qubits() const { return system_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }

    /// Validates operands against the width, then appends.
    void add(Gate g);
    /// Appends all gates of another circuit of the same width.
    void append(const Circuit &other);

  private:
    int width_;
    int system_;
    std::vector<Gate> gates_;
};

/// Throws InvalidInput unless `g` is well formed on a register of `width`.
void validate_gate(const Gate &g, int width);

struct CircuitMetrics {
    std::size_t gate_count = 0;
    std::size_t depth = 0;
    int width = 0;
    std::map<std::string, std::size_t> counts;

    [[nodiscard]] std::size_t count(GateKind kind) const;
};

/// Counts and ASAP layering depth: each gate goes one layer after the
/// latest gate sharing a qubit with it.
[[nodiscard]] CircuitMetrics metrics(const Circuit &c);

/**
 * Removes adjacent self-inverse pairs (H, CX, CCX, SWAP and CSX/CSXdg on
 * equal operands) and merges same-operand rotations, phases and diagonals
 * by adding angles. A gate is only moved past gates on disjoint qubits.
 */
[[nodiscard]] Circuit cancel_adjacent_inverses(const Circuit &c);

/// Replaces each CCX by CSX, CX, CSXdg, CX, CSX with matching polarities.
[[nodiscard]] Circuit decompose_ccx_to_two_qubit(const Circuit &c);

/**
 * Replaces every MCRotX with m >= 2 controls by a CCX ladder that ANDs the
 * controls into fresh ancillas, a CRotX from the last ancilla, and the
 * mirrored uncompute ladder. Ancillas are appended after the current width.
 */
[[nodiscard]] Circuit expand_multicontrol(const Circuit &c);

/// ROTZ/CX realization of a DiagPhase on at most three qubits, exact up to
/// a global phase.
[[nodiscard]] std::vector<Gate> synthesize_diagonal(const Gate &diag);

/// Qubit q becomes mapping[q]. `mapping` must be a permutation of the width.
[[nodiscard]] Circuit relabel(const Circuit &c, const std::vector<int> &mapping);

[[nodiscard]] Circuit inverse(const Circuit &c);

// --- serialization ------------------------------------------------------

[[nodiscard]] nlohmann::json to_json(const Circuit &c);
[[nodiscard]] Circuit circuit_from_json(const nlohmann::json &j);

/// OpenQASM 3 text. Throws InvalidInput for MCROTX and for DIAGPHASE on
/// more than two qubits.
[[nodiscard]] std::string to_qasm3(const Circuit &c);

} // namespace graylap

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

#include <sstream>

#include "graylap/circuit.hpp"
#include "graylap/csv.hpp"

namespace graylap {

nlohmann::json to_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &g : c.gates()) {
        nlohmann::json jg{{"kind", std::string(to_string(g.kind))},
                          {"qubits", g.qubits},
                          {"polarities", g.polarities},
                          {"angle", g.angle}};
        if (g.kind == GateKind::DiagPhase) {
            jg["phases"] = g.phases;
        }
        gates.push_back(std::move(jg));
    }
    return {{"width", c.width()}, {"system_qubits", c.system_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(j.at("width").get<int>(), j.at("system_qubits").get<int>());
        for (const auto &jg : j.at("gates")) {
            Gate g{parse_gate_kind(jg.at("kind").get<std::string>()),
                   jg.at("qubits").get<std::vector<int>>(),
                   jg.value("polarities", std::vector<int>{}),
                   jg.value("angle", 0.0),
                   jg.value("phases", std::vector<double>{})};
            c.add(std::move(g));
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("circuit JSON: ") + e.what());
    }
}

namespace {

std::string q(int i) { return "q[" + std::to_string(i) + "]"; }

std::string ctrl_modifier(int polarity) { return polarity == 1 ? "ctrl @ " : "negctrl @ "; }

// exp(i t X) = rx(-2t); likewise for Z.
std::string rx(double theta) { return "rx(" + csv::format(-2.0 * theta) + ")"; }

} // namespace

std::string to_qasm3(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
    out << "qubit[" << c.width() << "] q;\n";
    for (const auto &g : c.gates()) {
        const auto &qs = g.qubits;
        switch (g.kind) {
        case GateKind::RotX:
            out << rx(g.angle) << ' ' << q(qs[0]) << ";\n";
            break;
        case GateKind::RotZ:
            out << "rz(" << csv::format(-2.0 * g.angle) << ") " << q(qs[0]) << ";\n";
            break;
        case GateKind::H:
            out << "h " << q(qs[0]) << ";\n";
            break;
        case GateKind::CX:
            out << ctrl_modifier(g.polarities[0]) << "x " << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::CSX:
            out << ctrl_modifier(g.polarities[0]) << "sx " << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::CSXdg:
            out << ctrl_modifier(g.polarities[0]) << "inv @ sx " << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::CRotX:
            out << ctrl_modifier(g.polarities[0]) << rx(g.angle) << ' ' << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::CCX:
            // Polarity-0 controls are conjugated with X.
            for (int i = 0; i < 2; ++i) {
                if (g.polarities[static_cast<std::size_t>(i)] == 0) {
                    out << "x " << q(qs[static_cast<std::size_t>(i)]) << ";\n";
                }
            }
            out << "ccx " << q(qs[0]) << ", " << q(qs[1]) << ", " << q(qs[2]) << ";\n";
            for (int i = 0; i < 2; ++i) {
                if (g.polarities[static_cast<std::size_t>(i)] == 0) {
                    out << "x " << q(qs[static_cast<std::size_t>(i)]) << ";\n";
                }
            }
            break;
        case GateKind::CPhase:
            out << "cp(" << csv::format(g.angle) << ") " << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::Swap:
            out << "swap " << q(qs[0]) << ", " << q(qs[1]) << ";\n";
            break;
        case GateKind::MCRotX:
            throw InvalidInput("QASM export: MCROTX is outside the exported gate set; expand it first");
        case GateKind::DiagPhase: {
            const auto &ph = g.phases;
            if (qs.size() > 2) {
                throw InvalidInput("QASM export: DIAGPHASE on more than two qubits");
            }
            // phi(s) = phi_0 + sum_i d_i s_i (+ d_01 s_0 s_1).
            out << "gphase(" << csv::format(ph[0]) << ");\n";
            out << "p(" << csv::format(ph[1] - ph[0]) << ") " << q(qs[0]) << ";\n";
            if (qs.size() == 2) {
                out << "p(" << csv::format(ph[2] - ph[0]) << ") " << q(qs[1]) << ";\n";
                out << "cp(" << csv::format(ph[3] - ph[2] - ph[1] + ph[0]) << ") " << q(qs[0]) << ", " << q(qs[1])
                    << ";\n";
            }
            break;
        }
        }
    }
    return out.str();
}

} // namespace graylap

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

#include "graylap/circuit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <utility>

namespace graylap {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 12> kKindNames{{
    {GateKind::RotX, "ROTX"},
    {GateKind::RotZ, "ROTZ"},
    {GateKind::H, "H"},
    {GateKind::CX, "CX"},
    {GateKind::CSX, "CSX"},
    {GateKind::CSXdg, "CSXDG"},
    {GateKind::CRotX, "CROTX"},
    {GateKind::CCX, "CCX"},
    {GateKind::CPhase, "CPHASE"},
    {GateKind::Swap, "SWAP"},
    {GateKind::DiagPhase, "DIAGPHASE"},
    {GateKind::MCRotX, "MCROTX"},
}};

// Below this, a merged angle counts as zero.
constexpr double kAngleTol = 1e-12;

bool is_rotation(GateKind k) {
    return k == GateKind::RotX || k == GateKind::RotZ || k == GateKind::CRotX || k == GateKind::MCRotX ||
           k == GateKind::CPhase;
}

bool is_self_inverse(GateKind k) {
    return k == GateKind::H || k == GateKind::CX || k == GateKind::CCX || k == GateKind::Swap;
}

bool symmetric_operands(const Gate &a, const Gate &b) {
    // SWAP and CPHASE do not distinguish their two qubits.
    return a.kind == b.kind && (a.kind == GateKind::Swap || a.kind == GateKind::CPhase) &&
           a.qubits.size() == 2 && b.qubits.size() == 2 && a.qubits[0] == b.qubits[1] &&
           a.qubits[1] == b.qubits[0];
}

bool operands_match(const Gate &a, const Gate &b) { return a.same_operands(b) || symmetric_operands(a, b); }

enum class Merge { None, Annihilate, Replace };

// Outcome of placing `next` directly after `prev`.
Merge try_merge(const Gate &prev, const Gate &next, Gate &merged) {
    if (is_self_inverse(prev.kind) && operands_match(prev, next)) {
        return Merge::Annihilate;
    }
    const bool sx_pair = (prev.kind == GateKind::CSX && next.kind == GateKind::CSXdg) ||
                         (prev.kind == GateKind::CSXdg && next.kind == GateKind::CSX);
    if (sx_pair && prev.qubits == next.qubits && prev.polarities == next.polarities) {
        return Merge::Annihilate;
    }
    if (is_rotation(prev.kind) && operands_match(prev, next)) {
        merged = prev;
        merged.angle = prev.angle + next.angle;
        return std::abs(merged.angle) < kAngleTol ? Merge::Annihilate : Merge::Replace;
    }
    if (prev.kind == GateKind::DiagPhase && next.kind == GateKind::DiagPhase && prev.qubits == next.qubits) {
        merged = prev;
        bool all_zero = true;
        for (std::size_t s = 0; s < merged.phases.size(); ++s) {
            merged.phases[s] += next.phases[s];
            all_zero = all_zero && std::abs(merged.phases[s]) < kAngleTol;
        }
        return all_zero ? Merge::Annihilate : Merge::Replace;
    }
    return Merge::None;
}

// One stack sweep; returns true if anything changed.
bool cancel_pass(std::vector<Gate> &gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    bool changed = false;
    for (auto &g : gates) {
        bool absorbed = false;
        for (std::size_t i = out.size(); i-- > 0;) {
            Gate merged;
            const Merge m = try_merge(out[i], g, merged);
            if (m == Merge::Annihilate) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                absorbed = true;
                break;
            }
            if (m == Merge::Replace) {
                out[i] = std::move(merged);
                absorbed = true;
                break;
            }
            if ((out[i].support() & g.support()) != 0) {
                break;
            }
        }
        changed = changed || absorbed;
        if (!absorbed) {
            out.push_back(std::move(g));
        }
    }
    gates = std::move(out);
    return changed;
}

} // namespace

std::string_view to_string(GateKind kind) {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view text) {
    for (const auto &[k, name] : kKindNames) {
        if (name == text) {
            return k;
        }
    }
    throw InvalidInput("unknown gate kind '" + std::string(text) + "'");
}

// --- Gate ----------------------------------------------------------------

Gate Gate::rotx(double theta, int target) { return {GateKind::RotX, {target}, {}, theta, {}}; }
Gate Gate::rotz(double theta, int target) { return {GateKind::RotZ, {target}, {}, theta, {}}; }
Gate Gate::h(int target) { return {GateKind::H, {target}, {}, 0.0, {}}; }
Gate Gate::cx(int control, int polarity, int target) {
    return {GateKind::CX, {control, target}, {polarity}, 0.0, {}};
}
Gate Gate::csx(int control, int polarity, int target) {
    return {GateKind::CSX, {control, target}, {polarity}, 0.0, {}};
}
Gate Gate::csxdg(int control, int polarity, int target) {
    return {GateKind::CSXdg, {control, target}, {polarity}, 0.0, {}};
}
Gate Gate::crotx(double theta, int control, int polarity, int target) {
    return {GateKind::CRotX, {control, target}, {polarity}, theta, {}};
}
Gate Gate::ccx(int c1, int p1, int c2, int p2, int target) {
    return {GateKind::CCX, {c1, c2, target}, {p1, p2}, 0.0, {}};
}
Gate Gate::cphase(double theta, int control, int target) {
    return {GateKind::CPhase, {control, target}, {}, theta, {}};
}
Gate Gate::swap(int q1, int q2) { return {GateKind::Swap, {q1, q2}, {}, 0.0, {}}; }
Gate Gate::diag_phase(std::vector<int> qubits, std::vector<double> phases) {
    return {GateKind::DiagPhase, std::move(qubits), {}, 0.0, std::move(phases)};
}
Gate Gate::mcrotx(double theta, std::vector<int> controls, std::vector<int> polarities, int target) {
    controls.push_back(target);
    return {GateKind::MCRotX, std::move(controls), std::move(polarities), theta, {}};
}

std::size_t Gate::n_controls() const {
    switch (kind) {
    case GateKind::CX:
    case GateKind::CSX:
    case GateKind::CSXdg:
    case GateKind::CRotX:
    case GateKind::CPhase:
        return 1;
    case GateKind::CCX:
        return 2;
    case GateKind::MCRotX:
        return qubits.empty() ? 0 : qubits.size() - 1;
    default:
        return 0;
    }
}

std::uint64_t Gate::support() const {
    std::uint64_t s = 0;
    for (int q : qubits) {
        s |= std::uint64_t{1} << q;
    }
    return s;
}

bool Gate::same_operands(const Gate &other) const {
    return kind == other.kind && qubits == other.qubits && polarities == other.polarities;
}

void validate_gate(const Gate &g, int width) {
    const auto nq = g.qubits.size();
    std::size_t want_q = 0;
    std::size_t want_p = 0;
    switch (g.kind) {
    case GateKind::RotX:
    case GateKind::RotZ:
    case GateKind::H:
        want_q = 1;
        break;
    case GateKind::CX:
    case GateKind::CSX:
    case GateKind::CSXdg:
    case GateKind::CRotX:
        want_q = 2;
        want_p = 1;
        break;
    case GateKind::CCX:
        want_q = 3;
        want_p = 2;
        break;
    case GateKind::CPhase:
    case GateKind::Swap:
        want_q = 2;
        break;
    case GateKind::DiagPhase:
        if (nq == 0 || nq > 16 || g.phases.size() != (std::size_t{1} << nq)) {
            throw InvalidInput("DIAGPHASE needs 2^k phases for k qubits");
        }
        want_q = nq;
        break;
    case GateKind::MCRotX:
        if (nq == 0) {
            throw InvalidInput("MCROTX needs a target");
        }
        want_q = nq;
        want_p = nq - 1;
        break;
    }
    const std::string name(to_string(g.kind));
    if (nq != want_q || g.polarities.size() != want_p) {
        throw InvalidInput(name + ": wrong number of qubits or polarities");
    }
    std::uint64_t seen = 0;
    for (int q : g.qubits) {
        if (q < 0 || q >= width) {
            throw InvalidInput(name + ": qubit " + std::to_string(q) + " outside width " + std::to_string(width));
        }
        if (seen & (std::uint64_t{1} << q)) {
            throw InvalidInput(name + ": repeated qubit");
        }
        seen |= std::uint64_t{1} << q;
    }
    for (int p : g.polarities) {
        if (p != 0 && p != 1) {
            throw InvalidInput(name + ": polarity must be 0 or 1");
        }
    }
    if (!std::isfinite(g.angle)) {
        throw InvalidInput(name + ": non-finite angle");
    }
    for (double p : g.phases) {
        if (!std::isfinite(p)) {
            throw InvalidInput(name + ": non-finite phase");
        }
    }
}

// --- Circuit -------------------------------------------------------------

Circuit::Circuit(int width, int system_qubits) : width_(width), system_(system_qubits) {
    if (width < 1 || width > 30) {
        throw InvalidInput("circuit width must be in [1, 30]");
    }
    if (system_qubits < 0 || system_qubits > width) {
        throw InvalidInput("system qubits must be in [0, width]");
    }
}

void Circuit::add(Gate g) {
    validate_gate(g, width_);
    gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit &other) {
    if (other.width_ != width_) {
        throw InvalidInput("append: width mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

// --- metrics and passes --------------------------------------------------

std::size_t CircuitMetrics::count(GateKind kind) const {
    const auto it = counts.find(std::string(to_string(kind)));
    return it == counts.end() ? 0 : it->second;
}

CircuitMetrics metrics(const Circuit &c) {
    CircuitMetrics m;
    m.width = c.width();
    m.gate_count = c.size();
    std::vector<std::size_t> busy_until(static_cast<std::size_t>(c.width()), 0);
    for (const auto &g : c.gates()) {
        ++m.counts[std::string(to_string(g.kind))];
        std::size_t layer = 0;
        for (int q : g.qubits) {
            layer = std::max(layer, busy_until[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : g.qubits) {
            busy_until[static_cast<std::size_t>(q)] = layer;
        }
        m.depth = std::max(m.depth, layer);
    }
    return m;
}

Circuit cancel_adjacent_inverses(const Circuit &c) {
    std::vector<Gate> gates = c.gates();
    while (cancel_pass(gates)) {
    }
    Circuit out(c.width(), c.system_qubits());
    for (auto &g : gates) {
        out.add(std::move(g));
    }
    return out;
}

Circuit decompose_ccx_to_two_qubit(const Circuit &c) {
    Circuit out(c.width(), c.system_qubits());
    for (const auto &g : c.gates()) {
        if (g.kind != GateKind::CCX) {
            out.add(g);
            continue;
        }
        const int c1 = g.qubits[0];
        const int c2 = g.qubits[1];
        const int t = g.qubits[2];
        const int p1 = g.polarities[0];
        const int p2 = g.polarities[1];
        // V^b V^-(a xor b) V^a = X^(a b), a = [c1 == p1], b = [c2 == p2].
        out.add(Gate::csx(c2, p2, t));
        out.add(Gate::cx(c1, p1, c2));
        out.add(Gate::csxdg(c2, p2, t));
        out.add(Gate::cx(c1, p1, c2));
        out.add(Gate::csx(c1, p1, t));
    }
    return out;
}

Circuit expand_multicontrol(const Circuit &c) {
    std::size_t max_controls = 0;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::MCRotX) {
            max_controls = std::max(max_controls, g.n_controls());
        }
    }
    const int extra = max_controls >= 2 ? static_cast<int>(max_controls) - 1 : 0;
    Circuit out(c.width() + extra, c.system_qubits());
    for (const auto &g : c.gates()) {
        if (g.kind != GateKind::MCRotX) {
            out.add(g);
            continue;
        }
        const std::size_t m = g.n_controls();
        if (m == 0) {
            out.add(Gate::rotx(g.angle, g.target()));
            continue;
        }
        if (m == 1) {
            out.add(Gate::crotx(g.angle, g.qubits[0], g.polarities[0], g.target()));
            continue;
        }
        std::vector<Gate> ladder;
        const int anc0 = c.width();
        ladder.push_back(Gate::ccx(g.qubits[0], g.polarities[0], g.qubits[1], g.polarities[1], anc0));
        for (std::size_t i = 2; i < m; ++i) {
            const int prev = anc0 + static_cast<int>(i) - 2;
            ladder.push_back(Gate::ccx(g.qubits[i], g.polarities[i], prev, 1, prev + 1));
        }
        for (const auto &l : ladder) {
            out.add(l);
        }
        out.add(Gate::crotx(g.angle, anc0 + static_cast<int>(m) - 2, 1, g.target()));
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            out.add(*it);
        }
    }
    return out;
}

std::vector<Gate> synthesize_diagonal(const Gate &diag) {
    if (diag.kind != GateKind::DiagPhase) {
        throw InvalidInput("synthesize_diagonal: not a DIAGPHASE gate");
    }
    const std::size_t k = diag.qubits.size();
    if (k == 0 || k > 3 || diag.phases.size() != (std::size_t{1} << k)) {
        throw InvalidInput("synthesize_diagonal: supports one to three qubits");
    }
    // phi(s) = sum_T c_T (-1)^{|s & T|}; each T != 0 is exp(i c_T Z_T).
    std::vector<Gate> out;
    const std::size_t dim = std::size_t{1} << k;
    for (std::size_t t = 1; t < dim; ++t) {
        double c = 0.0;
        for (std::size_t s = 0; s < dim; ++s) {
            c += (std::popcount(s & t) % 2 == 0 ? 1.0 : -1.0) * diag.phases[s];
        }
        c /= static_cast<double>(dim);
        if (std::abs(c) < 1e-15) {
            continue;
        }
        std::vector<int> members;
        for (std::size_t q = 0; q < k; ++q) {
            if ((t >> q) & 1U) {
                members.push_back(diag.qubits[q]);
            }
        }
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
            out.push_back(Gate::cx(members[i], 1, members[i + 1]));
        }
        out.push_back(Gate::rotz(c, members.back()));
        for (std::size_t i = members.size() - 1; i-- > 0;) {
            out.push_back(Gate::cx(members[i], 1, members[i + 1]));
        }
    }
    return out;
}

Circuit relabel(const Circuit &c, const std::vector<int> &mapping) {
    if (mapping.size() != static_cast<std::size_t>(c.width())) {
        throw InvalidInput("relabel: mapping size must equal width");
    }
    std::vector<int> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) {
            throw InvalidInput("relabel: mapping is not a permutation");
        }
    }
    Circuit out(c.width(), c.system_qubits());
    for (Gate g : c.gates()) {
        for (int &q : g.qubits) {
            q = mapping[static_cast<std::size_t>(q)];
        }
        out.add(std::move(g));
    }
    return out;
}

Circuit inverse(const Circuit &c) {
    Circuit out(c.width(), c.system_qubits());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::CSX) {
            g.kind = GateKind::CSXdg;
        } else if (g.kind == GateKind::CSXdg) {
            g.kind = GateKind::CSX;
        }
        g.angle = -g.angle;
        for (double &p : g.phases) {
            p = -p;
        }
        out.add(std::move(g));
    }
    return out;
}

} // namespace graylap

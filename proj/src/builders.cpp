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

#include "graylap/builders.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace graylap {

namespace {

void check_range(int n, int lo, int hi) {
    if (n > hi) {
        throw CapacityError("register of " + std::to_string(n) + " qubits exceeds " + std::to_string(hi));
    }
    if (n < lo) {
        throw InvalidInput("register of " + std::to_string(n) + " qubits is below " + std::to_string(lo));
    }
}

// Moves significance labels onto physical qubits; ancillas stay put.
Circuit place_system(const Circuit &c, BitOrder order) {
    const BitLayout layout{c.system_qubits(), order};
    std::vector<int> mapping(static_cast<std::size_t>(c.width()));
    std::iota(mapping.begin(), mapping.end(), 0);
    for (int s = 0; s < c.system_qubits(); ++s) {
        mapping[static_cast<std::size_t>(s)] = layout.qubit(s);
    }
    return relabel(c, mapping);
}

// G_2, G_1 and G_0 close every variant of the Gray-code step.
void add_tail(Circuit &c, int n, double lambda) {
    if (n >= 3) {
        c.add(Gate::crotx(lambda, 0, 0, 2));
        c.add(Gate::crotx(-lambda, 0, 0, 1));
    }
    c.add(Gate::rotx(lambda, 0));
    c.add(Gate::rotx(lambda, 1));
}

} // namespace

std::string_view to_string(PolarityConvention p) {
    return p == PolarityConvention::Resolved ? "resolved" : "as-printed";
}

std::string_view to_string(Dispersion d) { return d == Dispersion::Quadratic ? "quadratic" : "cosine"; }

Dispersion parse_dispersion(std::string_view text) {
    if (text == "quadratic") {
        return Dispersion::Quadratic;
    }
    if (text == "cosine") {
        return Dispersion::Cosine;
    }
    throw InvalidInput("unknown dispersion '" + std::string(text) + "'");
}

Circuit build_brgc_step(const BuilderConfig &cfg) {
    const int n = cfg.n;
    check_range(n, 2, kMaxDenseQubits);
    const double l = cfg.lambda;
    if (n < 4) {
        Circuit c(n, n);
        add_tail(c, n, l);
        return place_system(c, cfg.order);
    }

    const int n_tot = 2 * n - 3;
    const int n_c = n - 2;
    const bool printed = cfg.polarity == PolarityConvention::AsPrinted;
    Circuit c(n_tot, n);

    // Ancilla n_tot-i accumulates prod_{m<=i} P0_m.
    c.add(Gate::ccx(0, 0, 1, 0, n_tot - 1));
    for (int i = 2; i < n_c; ++i) {
        if (printed) {
            c.add(Gate::ccx(i, 1, n_tot - i + 1, 0, n_tot - i));
        } else {
            c.add(Gate::ccx(i, 0, n_tot - i + 1, 1, n_tot - i));
        }
    }

    // Peel one projector per pass: controlled G_{n-1-c}, then uncompute
    // the ancilla that held its control.
    for (int cc = 0; cc < n - 3; ++cc) {
        const int anc = n_tot - n_c + 1 + cc;
        const int first_ctrl = printed ? n_tot - n_c + 1 - cc : anc;
        c.add(Gate::crotx(l, first_ctrl, 1, n - 1 - cc));
        c.add(Gate::crotx(-l, anc, 1, n - 2 - cc));
        const int partner = (n_tot - n_c + 2 + cc) % n_tot;
        const int partner_pol = partner > n - 1 ? 1 : 0;
        c.add(Gate::ccx(n_c - 1 - cc, 0, partner, partner_pol, anc));
    }
    add_tail(c, n, l);
    return place_system(c, cfg.order);
}

Circuit build_brgc_multicontrol_reference(const BuilderConfig &cfg) {
    const int n = cfg.n;
    check_range(n, 2, kMaxDenseQubits);
    Circuit c(n, n);
    for (int k = n - 1; k >= 2; --k) {
        std::vector<int> controls;
        for (int i = 0; i <= k - 2; ++i) {
            controls.push_back(i);
        }
        const std::vector<int> pols(controls.size(), 0);
        c.add(Gate::mcrotx(cfg.lambda, controls, pols, k));
        c.add(Gate::mcrotx(-cfg.lambda, controls, pols, k - 1));
    }
    c.add(Gate::rotx(cfg.lambda, 0));
    c.add(Gate::rotx(cfg.lambda, 1));
    return place_system(c, cfg.order);
}

Circuit build_binary_step(int n, double lambda, BitOrder order) {
    check_range(n, 2, 8);
    Circuit c(n, n);
    // Strings already carry physical labels.
    for (const auto &s : pauli_expand_binary(n, order)) {
        std::vector<int> support;
        for (int q = 0; q < n; ++q) {
            const Pauli p = s.at(q);
            if (p == Pauli::I) {
                continue;
            }
            support.push_back(q);
            // exp(-i pi/4 X) Y exp(i pi/4 X) = Z; H X H = Z.
            c.add(p == Pauli::X ? Gate::h(q) : Gate::rotx(-std::numbers::pi / 4.0, q));
        }
        for (std::size_t i = 0; i + 1 < support.size(); ++i) {
            c.add(Gate::cx(support[i], 1, support[i + 1]));
        }
        c.add(Gate::rotz(lambda * s.coefficient(), support.back()));
        for (std::size_t i = support.size() - 1; i-- > 0;) {
            c.add(Gate::cx(support[i], 1, support[i + 1]));
        }
        for (int q : support) {
            c.add(s.at(q) == Pauli::X ? Gate::h(q) : Gate::rotx(std::numbers::pi / 4.0, q));
        }
    }
    return c;
}

Circuit build_qft(int n) {
    check_range(n, 1, kMaxDenseQubits);
    Circuit c(n, n);
    for (int i = n - 1; i >= 0; --i) {
        c.add(Gate::h(i));
        for (int j = i - 1; j >= 0; --j) {
            c.add(Gate::cphase(std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - j)), j, i));
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        c.add(Gate::swap(i, n - 1 - i));
    }
    return c;
}

std::vector<double> kinetic_phases(const LatticeSpec &spec, double dt, Dispersion dispersion) {
    if (!std::isfinite(dt)) {
        throw InvalidInput("kinetic_phases: non-finite time step");
    }
    const std::size_t dim = spec.sites();
    const double a = spec.units.spacing_natural();
    const double m = spec.units.mass_mev;
    std::vector<double> phases(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        double energy = 0.0;
        if (dispersion == Dispersion::Cosine) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim);
            energy = (2.0 - 2.0 * std::cos(theta)) * spec.units.hopping_scale();
        } else {
            const auto signed_k = static_cast<double>(k) - (k >= dim / 2 ? static_cast<double>(dim) : 0.0);
            const double p = 2.0 * std::numbers::pi * signed_k / (static_cast<double>(dim) * a);
            energy = p * p / (2.0 * m);
        }
        phases[k] = -dt * energy;
    }
    return phases;
}

Circuit build_qft_kinetic_step(const LatticeSpec &spec, double dt, Dispersion dispersion, BitOrder order) {
    const int n = spec.n;
    check_range(n, 1, kMaxDenseQubits);
    if (dispersion != Dispersion::Quadratic && dispersion != Dispersion::Cosine) {
        throw InvalidInput("build_qft_kinetic_step: unknown dispersion");
    }
    const Circuit qft = build_qft(n);
    Circuit c(n, n);
    c.append(qft);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    c.add(Gate::diag_phase(all, kinetic_phases(spec, dt, dispersion)));
    c.append(inverse(qft));
    return place_system(c, order);
}

} // namespace graylap

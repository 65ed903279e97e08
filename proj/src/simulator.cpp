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

#include "graylap/simulator.hpp"

#include <cmath>
#include <numbers>

namespace graylap {

namespace {

kernels::Controls controls_of(const Gate &g) {
    kernels::Controls c;
    const std::size_t m = g.n_controls();
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << g.qubits[i];
        c.mask |= bit;
        // CPHASE has no stored polarity; its control fires on |1>.
        if (g.polarities.empty() || g.polarities[i] == 1) {
            c.value |= bit;
        }
    }
    return c;
}

void dispatch_2x2(std::span<Complex> amps, int target, const Mat2 &m, kernels::Controls ctrl,
                  kernels::Backend backend) {
    if (backend == kernels::Backend::OpenMP) {
        kernels::omp::apply_2x2(amps, target, m, ctrl);
    } else {
        kernels::serial::apply_2x2(amps, target, m, ctrl);
    }
}

} // namespace

Mat2 gate_matrix(const Gate &g) {
    const double c = std::cos(g.angle);
    const double s = std::sin(g.angle);
    switch (g.kind) {
    case GateKind::RotX:
    case GateKind::CRotX:
    case GateKind::MCRotX:
        return {Complex{c}, Complex{0, s}, Complex{0, s}, Complex{c}};
    case GateKind::RotZ:
        return {Complex{c, s}, Complex{0}, Complex{0}, Complex{c, -s}};
    case GateKind::H: {
        const double r = std::numbers::sqrt2 / 2.0;
        return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
    }
    case GateKind::CX:
    case GateKind::CCX:
        return mat2::kX;
    case GateKind::CSX:
        return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
    case GateKind::CSXdg:
        return {Complex{0.5, -0.5}, Complex{0.5, 0.5}, Complex{0.5, 0.5}, Complex{0.5, -0.5}};
    case GateKind::CPhase:
        return {Complex{1}, Complex{0}, Complex{0}, std::polar(1.0, g.angle)};
    case GateKind::Swap:
    case GateKind::DiagPhase:
        break;
    }
    throw InvalidInput("gate_matrix: gate has no single-target matrix");
}

void apply_gate(std::span<Complex> amps, const Gate &g, kernels::Backend backend) {
    switch (g.kind) {
    case GateKind::Swap:
        if (backend == kernels::Backend::OpenMP) {
            kernels::omp::apply_swap(amps, g.qubits[0], g.qubits[1]);
        } else {
            kernels::serial::apply_swap(amps, g.qubits[0], g.qubits[1]);
        }
        return;
    case GateKind::DiagPhase:
        if (backend == kernels::Backend::OpenMP) {
            kernels::omp::apply_diagonal(amps, g.qubits, g.phases);
        } else {
            kernels::serial::apply_diagonal(amps, g.qubits, g.phases);
        }
        return;
    default:
        dispatch_2x2(amps, g.target(), gate_matrix(g), controls_of(g), backend);
    }
}

StateVector apply(const Circuit &c, const StateVector &state, kernels::Backend backend) {
    if (state.n_qubits() != c.width()) {
        throw InvalidInput("apply: state has " + std::to_string(state.n_qubits()) + " qubits, circuit width is " +
                           std::to_string(c.width()));
    }
    StateVector out = state;
    for (const auto &g : c.gates()) {
        apply_gate(out.amplitudes(), g, backend);
    }
    return out;
}

DenseOperator circuit_unitary(const Circuit &c) {
    if (c.width() > kMaxDenseQubits) {
        throw CapacityError("circuit_unitary: width " + std::to_string(c.width()) + " exceeds " +
                            std::to_string(kMaxDenseQubits));
    }
    const auto dim = static_cast<std::int64_t>(std::size_t{1} << c.width());
    Matrix u(dim, dim);
    // Columns are independent; the per-gate kernels stay serial inside.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t col = 0; col < dim; ++col) {
        std::vector<Complex> amps(static_cast<std::size_t>(dim));
        amps[static_cast<std::size_t>(col)] = 1.0;
        for (const auto &g : c.gates()) {
            apply_gate(amps, g, kernels::Backend::Serial);
        }
        for (std::int64_t r = 0; r < dim; ++r) {
            u(r, col) = amps[static_cast<std::size_t>(r)];
        }
    }
    return DenseOperator(std::move(u));
}

SystemUnitary system_unitary(const Circuit &c) {
    const int n = c.system_qubits();
    if (n < 1 || n > kMaxDenseQubits) {
        throw CapacityError("system_unitary: system register must have 1.." + std::to_string(kMaxDenseQubits) +
                            " qubits");
    }
    const auto sys_dim = static_cast<std::int64_t>(std::size_t{1} << n);
    const std::size_t full_dim = std::size_t{1} << c.width();
    Matrix u(sys_dim, sys_dim);
    std::vector<double> leak(static_cast<std::size_t>(sys_dim), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t col = 0; col < sys_dim; ++col) {
        std::vector<Complex> amps(full_dim);
        amps[static_cast<std::size_t>(col)] = 1.0;
        for (const auto &g : c.gates()) {
            apply_gate(amps, g, kernels::Backend::Serial);
        }
        double outside = 0.0;
        for (std::size_t r = 0; r < full_dim; ++r) {
            if (r < static_cast<std::size_t>(sys_dim)) {
                u(static_cast<std::int64_t>(r), col) = amps[r];
            } else {
                outside += std::norm(amps[r]);
            }
        }
        leak[static_cast<std::size_t>(col)] = std::sqrt(outside);
    }
    double worst = 0.0;
    for (double l : leak) {
        worst = std::max(worst, l);
    }
    return {DenseOperator(std::move(u)), worst};
}

} // namespace graylap

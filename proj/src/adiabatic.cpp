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

#include "graylap/adiabatic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>

#include "graylap/csv.hpp"
#include "graylap/simulator.hpp"

namespace graylap {

namespace {

constexpr double kPi = std::numbers::pi;

double nested_sin2(double s) {
    const double inner = std::sin(kPi * s / 2.0);
    const double outer = std::sin(kPi / 2.0 * inner * inner);
    return outer * outer;
}

double sin2_antiderivative(double s) { return s / 2.0 - std::sin(kPi * s) / (2.0 * kPi); }

void check_schedule(const Schedule &schedule) {
    if (schedule.steps < 1) {
        throw InvalidInput("schedule needs at least one step");
    }
    if (!(schedule.total_time > 0.0) || !std::isfinite(schedule.total_time)) {
        throw InvalidInput("schedule total time must be positive");
    }
}

void check_potential(const LatticeSpec &spec, const Potential &pot) {
    if (pot.samples.size() != spec.sites()) {
        throw InvalidInput("potential has " + std::to_string(pot.samples.size()) + " samples, lattice has " +
                           std::to_string(spec.sites()) + " sites");
    }
}

Vector encoded_diagonal(const LatticeSpec &spec, const Potential &pot, CodeKind code, BitOrder order) {
    check_potential(spec, pot);
    Vector d(static_cast<Eigen::Index>(spec.sites()));
    for (std::size_t r = 0; r < spec.sites(); ++r) {
        d(static_cast<Eigen::Index>(basis_index(r, spec.n, code, order))) = pot.samples[r];
    }
    return d;
}

double step_average(const Schedule &schedule, int k) {
    const double s0 = static_cast<double>(k) / schedule.steps;
    const double s1 = static_cast<double>(k + 1) / schedule.steps;
    return ramp_average(schedule.ramp, s0, s1);
}

double real_expectation(const Vector &psi, const DenseOperator &op) {
    return psi.dot(op.matrix() * psi).real();
}

} // namespace

Potential step_well(const LatticeSpec &spec, double v0_mev, double length_fm) {
    if (!std::isfinite(v0_mev) || !(length_fm > 0.0)) {
        throw InvalidInput("step_well: need finite depth and positive length");
    }
    Potential p{PotentialKind::StepWell, v0_mev, length_fm, {}};
    for (std::size_t r = 0; r < spec.sites(); ++r) {
        const double x = static_cast<double>(r) * spec.units.spacing_fm;
        p.samples.push_back(x < length_fm / 2.0 ? v0_mev : -v0_mev);
    }
    return p;
}

Potential harmonic(const LatticeSpec &spec, double omega_mev) {
    if (!(omega_mev > 0.0)) {
        throw InvalidInput("harmonic: omega must be positive");
    }
    Potential p{PotentialKind::Harmonic, omega_mev, 0.0, {}};
    const double a = spec.units.spacing_natural();
    const double half = static_cast<double>(spec.sites()) / 2.0;
    for (std::size_t r = 0; r < spec.sites(); ++r) {
        const double x = (static_cast<double>(r) - half) * a;
        p.samples.push_back(0.5 * spec.units.mass_mev * omega_mev * omega_mev * x * x);
    }
    return p;
}

std::string_view to_string(Ramp r) {
    switch (r) {
    case Ramp::Constant:
        return "constant";
    case Ramp::Linear:
        return "linear";
    case Ramp::Sin2:
        return "sin2";
    case Ramp::NestedSin2:
        return "nested-sin2";
    }
    return "?";
}

Ramp parse_ramp(std::string_view text) {
    for (Ramp r : {Ramp::Constant, Ramp::Linear, Ramp::Sin2, Ramp::NestedSin2}) {
        if (to_string(r) == text) {
            return r;
        }
    }
    throw InvalidInput("unknown ramp '" + std::string(text) + "'");
}

double ramp_value(Ramp r, double s) {
    switch (r) {
    case Ramp::Constant:
        return 1.0;
    case Ramp::Linear:
        return s;
    case Ramp::Sin2: {
        const double v = std::sin(kPi * s / 2.0);
        return v * v;
    }
    case Ramp::NestedSin2:
        return nested_sin2(s);
    }
    return 0.0;
}

double ramp_average(Ramp r, double s0, double s1) {
    if (!(s1 > s0)) {
        throw InvalidInput("ramp_average: empty interval");
    }
    const double w = s1 - s0;
    switch (r) {
    case Ramp::Constant:
        return 1.0;
    case Ramp::Linear:
        return 0.5 * (s0 + s1);
    case Ramp::Sin2:
        return (sin2_antiderivative(s1) - sin2_antiderivative(s0)) / w;
    case Ramp::NestedSin2:
        return boost::math::quadrature::gauss<double, 30>::integrate(nested_sin2, s0, s1) / w;
    }
    return 0.0;
}

DenseOperator potential_operator(const LatticeSpec &spec, const Potential &pot, CodeKind code, BitOrder order) {
    return DenseOperator(Matrix(encoded_diagonal(spec, pot, code, order).asDiagonal()));
}

DenseOperator hamiltonian_at(double s, const LatticeSpec &spec, const Potential &pot, CodeKind code, Ramp ramp,
                             BitOrder order) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw InvalidInput("hamiltonian_at: s outside [0, 1]");
    }
    return kinetic_operator(spec, code, order) +
           Complex{ramp_value(ramp, s)} * potential_operator(spec, pot, code, order);
}

DenseOperator magnus1_step_unitary(const LatticeSpec &spec, const Potential &pot, const Schedule &schedule,
                                   int step_index, CodeKind code, BitOrder order) {
    check_schedule(schedule);
    if (step_index < 0 || step_index >= schedule.steps) {
        throw InvalidInput("magnus1_step_unitary: step index out of range");
    }
    const double fbar = step_average(schedule, step_index);
    const DenseOperator h =
        kinetic_operator(spec, code, order) + Complex{fbar} * potential_operator(spec, pot, code, order);
    return herm_expm(h, Complex{0.0, -schedule.dt()});
}

DenseOperator quadratic_kinetic_operator(const LatticeSpec &spec, BitOrder order) {
    // exp(-i dt T) has phases -dt E_k, so dt = -1 recovers E_k.
    const std::vector<double> energies = kinetic_phases(spec, -1.0, Dispersion::Quadratic);
    const auto dim = static_cast<Eigen::Index>(spec.sites());
    Matrix f(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                                 2.0 * kPi * static_cast<double>(j * k) / static_cast<double>(dim));
        }
    }
    Vector e(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        e(k) = energies[static_cast<std::size_t>(k)];
    }
    const DenseOperator position(f.adjoint() * e.asDiagonal() * f);
    return to_encoded_basis(position, CodeKind::Binary, order);
}

std::string_view to_string(Evolver e) {
    switch (e) {
    case Evolver::ExactMagnus:
        return "exact";
    case Evolver::BRGCCircuit:
        return "brgc";
    case Evolver::BinaryCircuit:
        return "binary";
    case Evolver::QFTQuadratic:
        return "qft";
    }
    return "?";
}

Evolver parse_evolver(std::string_view text) {
    for (Evolver e : {Evolver::ExactMagnus, Evolver::BRGCCircuit, Evolver::BinaryCircuit, Evolver::QFTQuadratic}) {
        if (to_string(e) == text) {
            return e;
        }
    }
    throw InvalidInput("unknown evolver '" + std::string(text) + "' (expected exact, brgc, binary or qft)");
}

EvolutionTrace evolve(const LatticeSpec &spec, const Potential &pot, const Schedule &schedule, Evolver evolver,
                      const std::vector<Complex> &initial, CodeKind reference_code, BitOrder order) {
    check_schedule(schedule);
    check_potential(spec, pot);
    const int n = spec.n;
    if (n < 1 || n > kMaxDenseQubits) {
        throw InvalidInput("evolve: lattice qubit count out of range");
    }
    if ((evolver == Evolver::BRGCCircuit || evolver == Evolver::BinaryCircuit) && n < 2) {
        throw InvalidInput("evolve: Laplacian circuits need n >= 2");
    }
    if (evolver == Evolver::BinaryCircuit && n > 8) {
        throw InvalidInput("evolve: binary circuit supports n <= 8");
    }
    const auto sys_dim = static_cast<Eigen::Index>(spec.sites());
    Vector psi0(sys_dim);
    if (initial.empty()) {
        psi0.setConstant(Complex{1.0 / std::sqrt(static_cast<double>(sys_dim))});
    } else {
        if (initial.size() != spec.sites()) {
            throw InvalidInput("evolve: initial state has the wrong dimension");
        }
        psi0 = Eigen::Map<const Vector>(initial.data(), sys_dim);
        if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10) {
            throw InvalidInput("evolve: initial state is not normalized");
        }
    }

    CodeKind code = reference_code;
    if (evolver == Evolver::BRGCCircuit) {
        code = CodeKind::BRGC;
    } else if (evolver == Evolver::BinaryCircuit || evolver == Evolver::QFTQuadratic) {
        code = CodeKind::Binary;
    }
    const DenseOperator t_measure =
        evolver == Evolver::QFTQuadratic ? quadratic_kinetic_operator(spec, order) : kinetic_operator(spec, code, order);
    const DenseOperator v_op = potential_operator(spec, pot, code, order);
    const Vector v_diag = encoded_diagonal(spec, pot, code, order);
    const double dt = schedule.dt();

    EvolutionTrace trace{evolver, {}, 0.0};
    trace.records.reserve(static_cast<std::size_t>(schedule.steps) + 1);
    auto record = [&](int step, const Vector &sys) {
        trace.records.push_back({step, step * dt, real_expectation(sys, t_measure), real_expectation(sys, v_op)});
        trace.max_norm_drift = std::max(trace.max_norm_drift, std::abs(sys.squaredNorm() - 1.0));
    };

    if (evolver == Evolver::ExactMagnus) {
        const DenseOperator t_fd = kinetic_operator(spec, code, order);
        Vector psi = psi0;
        record(0, psi);
        for (int k = 0; k < schedule.steps; ++k) {
            const DenseOperator h = t_fd + Complex{step_average(schedule, k)} * v_op;
            psi = herm_expm(h, Complex{0.0, -dt}).matrix() * psi;
            record(k + 1, psi);
        }
        return trace;
    }

    const double lambda = dt * spec.units.hopping_scale();
    Circuit kinetic = evolver == Evolver::BRGCCircuit   ? build_brgc_step({n, lambda, PolarityConvention::Resolved,
                                                                           Dispersion::Quadratic, order})
                      : evolver == Evolver::BinaryCircuit ? build_binary_step(n, lambda, order)
                                                          : build_qft_kinetic_step(spec, dt, Dispersion::Quadratic, order);
    std::vector<Complex> amps(std::size_t{1} << kinetic.width());
    std::copy(psi0.data(), psi0.data() + sys_dim, amps.begin());
    std::vector<int> system(static_cast<std::size_t>(n));
    std::iota(system.begin(), system.end(), 0);
    auto system_view = [&]() { return Vector(Eigen::Map<const Vector>(amps.data(), sys_dim)); };

    record(0, system_view());
    for (int k = 0; k < schedule.steps; ++k) {
        const double fbar = step_average(schedule, k);
        std::vector<double> phases(static_cast<std::size_t>(sys_dim));
        for (Eigen::Index b = 0; b < sys_dim; ++b) {
            phases[static_cast<std::size_t>(b)] = -dt * fbar * v_diag(b).real();
        }
        apply_gate(amps, Gate::diag_phase(system, std::move(phases)));
        for (const auto &g : kinetic.gates()) {
            apply_gate(amps, g);
        }
        record(k + 1, system_view());
    }
    return trace;
}

double relative_error(double value, double reference) {
    if (reference == 0.0) {
        throw InvalidInput("relative_error: zero reference");
    }
    return std::abs(value - reference) / std::abs(reference);
}

double trace_deviation(const EvolutionTrace &trace, const EvolutionTrace &reference) {
    if (trace.records.empty() || reference.records.empty()) {
        throw InvalidInput("trace_deviation: empty trace");
    }
    const auto &a = trace.records.back();
    const auto &b = reference.records.back();
    return std::abs(a.exp_t - b.exp_t) + std::abs(a.exp_v - b.exp_v);
}

double commutator_TV_norm(const LatticeSpec &spec, const Potential &pot, CodeKind code) {
    return spectral_norm(commutator(kinetic_operator(spec, code), potential_operator(spec, pot, code)));
}

void write_trace_csv(std::ostream &out, const std::vector<EvolutionTrace> &traces) {
    csv::write_row(out, {"step", "time_MeVinv", "evolver", "expT_MeV", "expV_MeV"});
    for (const auto &t : traces) {
        const std::string name(to_string(t.evolver));
        for (const auto &r : t.records) {
            csv::write_row(out, {std::to_string(r.step), csv::format(r.time), name, csv::format(r.exp_t),
                                 csv::format(r.exp_v)});
        }
    }
}

nlohmann::json describe(const LatticeSpec &spec, const Potential &pot, const Schedule &schedule) {
    return {{"n", spec.n},
            {"sites", spec.sites()},
            {"mass_MeV", spec.units.mass_mev},
            {"a_fm", spec.units.spacing_fm},
            {"hbarc_MeVfm", PhysicalUnits::kHbarC},
            {"potential", pot.kind == PotentialKind::StepWell ? "step-well" : "harmonic"},
            {"potential_strength_MeV", pot.strength},
            {"L_fm", pot.length_fm},
            {"t_MeVinv", schedule.total_time},
            {"steps", schedule.steps},
            {"dt_MeVinv", schedule.dt()},
            {"ramp", std::string(to_string(schedule.ramp))}};
}

} // namespace graylap

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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "graylap/adiabatic.hpp"
#include "graylap/trotter.hpp"

namespace graylap {
namespace {

LatticeSpec section_spec(int n = 2) { return {n, PhysicalUnits(140.0, 5.0)}; }

Potential section_well(const LatticeSpec &spec) {
    return step_well(spec, -10.0, static_cast<double>(spec.sites()) * spec.units.spacing_fm);
}

// Composite Simpson rule, fine enough to act as an independent reference.
double simpson(Ramp r, double s0, double s1) {
    const int m = 20000;
    const double h = (s1 - s0) / m;
    double acc = ramp_value(r, s0) + ramp_value(r, s1);
    for (int i = 1; i < m; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * ramp_value(r, s0 + i * h);
    }
    return acc * h / 3.0 / (s1 - s0);
}

double expectation(const Vector &psi, const DenseOperator &op) { return psi.dot(op.matrix() * psi).real(); }

TEST(Potential, StepWellSamples) {
    const auto spec = section_spec();
    const auto p = section_well(spec);
    ASSERT_EQ(p.samples.size(), 4u);
    // Sites at 0 and 5 fm lie below L/2 = 10 fm.
    EXPECT_EQ(p.samples, (std::vector<double>{-10.0, -10.0, 10.0, 10.0}));
    EXPECT_THROW((void)step_well(spec, -10.0, 0.0), InvalidInput);
}

TEST(Potential, HarmonicIsSymmetricAboutCentre) {
    const LatticeSpec spec{3, PhysicalUnits(940.0, 1.0)};
    const auto p = harmonic(spec, 10.0);
    ASSERT_EQ(p.samples.size(), 8u);
    EXPECT_NEAR(p.samples[4], 0.0, 1e-12);
    EXPECT_NEAR(p.samples[3], p.samples[5], 1e-12);
    EXPECT_THROW((void)harmonic(spec, -1.0), InvalidInput);
}

TEST(Ramp, Endpoints) {
    for (auto r : {Ramp::Linear, Ramp::Sin2, Ramp::NestedSin2}) {
        EXPECT_NEAR(ramp_value(r, 0.0), 0.0, 1e-15);
        EXPECT_NEAR(ramp_value(r, 1.0), 1.0, 1e-15);
        double prev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double v = ramp_value(r, i / 100.0);
            EXPECT_GE(v, prev - 1e-15);
            prev = v;
        }
    }
    EXPECT_EQ(ramp_value(Ramp::Constant, 0.3), 1.0);
}

TEST(Ramp, AverageMatchesQuadrature) {
    for (auto r : {Ramp::Linear, Ramp::Sin2, Ramp::NestedSin2}) {
        for (auto [s0, s1] : {std::pair{0.0, 0.0005}, std::pair{0.3, 0.3005}, std::pair{0.0, 1.0}}) {
            EXPECT_NEAR(ramp_average(r, s0, s1), simpson(r, s0, s1), 1e-12) << to_string(r) << " " << s0;
        }
    }
}

TEST(Ramp, NamesRoundTrip) {
    for (auto r : {Ramp::Constant, Ramp::Linear, Ramp::Sin2, Ramp::NestedSin2}) {
        EXPECT_EQ(parse_ramp(to_string(r)), r);
    }
    EXPECT_THROW((void)parse_ramp("cubic"), InvalidInput);
}

TEST(Hamiltonian, EndpointsAndEncodingSimilarity) {
    const auto spec = section_spec(3);
    const auto pot = step_well(spec, -10.0, 40.0);
    EXPECT_LT(hamiltonian_at(0.0, spec, pot, CodeKind::BRGC).max_abs_diff(kinetic_operator(spec, CodeKind::BRGC)),
              1e-15);
    const auto hb = hamiltonian_at(1.0, spec, pot, CodeKind::Binary);
    const auto hg = hamiltonian_at(1.0, spec, pot, CodeKind::BRGC);
    const auto pb = position_permutation(3, CodeKind::Binary, kDefaultBitOrder);
    const auto pg = position_permutation(3, CodeKind::BRGC, kDefaultBitOrder);
    EXPECT_LT((pg * pb.adjoint() * hb * pb * pg.adjoint()).max_abs_diff(hg), 1e-12);
    EXPECT_THROW((void)hamiltonian_at(1.5, spec, pot, CodeKind::BRGC), InvalidInput);
}

TEST(Hamiltonian, PotentialDiagonalInPositionOrder) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const auto v = potential_operator(spec, pot, CodeKind::BRGC);
    for (std::uint64_t r = 0; r < 4; ++r) {
        const auto b = basis_index(r, 2, CodeKind::BRGC, kDefaultBitOrder);
        EXPECT_EQ(v(b, b), Complex(pot.samples[r]));
    }
}

TEST(Magnus, ConstantRampIsFullHamiltonian) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const Schedule sched{1.0, 10, Ramp::Constant};
    const auto u = magnus1_step_unitary(spec, pot, sched, 3, CodeKind::BRGC);
    const auto h = kinetic_operator(spec, CodeKind::BRGC) + potential_operator(spec, pot, CodeKind::BRGC);
    EXPECT_LT(u.max_abs_diff(herm_expm(h, Complex{0.0, -0.1})), 1e-12);
    EXPECT_TRUE(u.is_unitary());
}

TEST(Magnus, LinearRampUsesMidpointAverage) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const Schedule sched{2.0, 8, Ramp::Linear};
    for (int k : {0, 3, 7}) {
        const double fbar = (k + 0.5) / 8.0;
        const auto h = kinetic_operator(spec, CodeKind::Binary) +
                       Complex{fbar} * potential_operator(spec, pot, CodeKind::Binary);
        const auto u = magnus1_step_unitary(spec, pot, sched, k, CodeKind::Binary);
        EXPECT_LT(u.max_abs_diff(herm_expm(h, Complex{0.0, -0.25})), 1e-12) << k;
    }
    EXPECT_THROW((void)magnus1_step_unitary(spec, pot, sched, 8, CodeKind::Binary), InvalidInput);
}

TEST(Evolve, UniformStateIsKineticEigenstate) {
    const auto spec = section_spec(3);
    const auto flat = step_well(spec, 0.0, 40.0);
    const Schedule sched{5.0, 50};
    for (auto e : {Evolver::ExactMagnus, Evolver::BRGCCircuit, Evolver::BinaryCircuit}) {
        const auto trace = evolve(spec, flat, sched, e);
        ASSERT_EQ(trace.records.size(), 51u);
        for (const auto &r : trace.records) {
            EXPECT_NEAR(r.exp_t, 0.0, 1e-10) << to_string(e);
        }
    }
}

TEST(Evolve, ExactTracesAgreeAcrossEncodings) {
    const auto spec = section_spec(3);
    const auto pot = step_well(spec, -10.0, 40.0);
    const Schedule sched{10.0, 200};
    const auto a = evolve(spec, pot, sched, Evolver::ExactMagnus, {}, CodeKind::BRGC);
    const auto b = evolve(spec, pot, sched, Evolver::ExactMagnus, {}, CodeKind::Binary);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_NEAR(a.records[i].exp_t, b.records[i].exp_t, 1e-10);
        EXPECT_NEAR(a.records[i].exp_v, b.records[i].exp_v, 1e-10);
    }
}

TEST(Evolve, CircuitEvolverMatchesMatrixProductOracle) {
    // Potential phase first, then the Trotterised hopping with lambda = dt / (2 M a^2).
    for (int n : {2, 3, 4}) {
        const auto spec = section_spec(n);
        const auto pot = step_well(spec, -10.0, static_cast<double>(spec.sites()) * 5.0);
        const Schedule sched{4.0, 40};
        const double dt = sched.dt();
        const double lambda = dt * spec.units.hopping_scale();
        for (auto [e, code] : {std::pair{Evolver::BRGCCircuit, CodeKind::BRGC},
                               std::pair{Evolver::BinaryCircuit, CodeKind::Binary}}) {
            const auto u_kin = code == CodeKind::BRGC ? u1_brgc(n, lambda) : u1_binary(n, lambda);
            const auto v = potential_operator(spec, pot, code);
            const auto t = kinetic_operator(spec, code);
            Vector psi = Vector::Constant(static_cast<Eigen::Index>(spec.sites()),
                                          1.0 / std::sqrt(static_cast<double>(spec.sites())));
            const auto trace = evolve(spec, pot, sched, e);
            for (int k = 0; k < sched.steps; ++k) {
                const double fbar = ramp_average(sched.ramp, static_cast<double>(k) / sched.steps,
                                                 static_cast<double>(k + 1) / sched.steps);
                Vector phase = (Complex{0.0, -dt * fbar} * v.matrix().diagonal()).array().exp();
                psi = u_kin.matrix() * (phase.asDiagonal() * psi);
                const auto &rec = trace.records[static_cast<std::size_t>(k + 1)];
                ASSERT_NEAR(rec.exp_t, expectation(psi, t), 1e-10) << n << " step " << k;
                ASSERT_NEAR(rec.exp_v, expectation(psi, v), 1e-10) << n << " step " << k;
            }
        }
    }
}

TEST(Evolve, QftEvolverMatchesQuadraticOracle) {
    const auto spec = section_spec(3);
    const auto pot = step_well(spec, -10.0, 40.0);
    const Schedule sched{3.0, 30};
    const double dt = sched.dt();
    const auto tq = quadratic_kinetic_operator(spec);
    const auto v = potential_operator(spec, pot, CodeKind::Binary);
    const auto u_kin = herm_expm(tq, Complex{0.0, -dt});
    Vector psi = Vector::Constant(8, 1.0 / std::sqrt(8.0));
    const auto trace = evolve(spec, pot, sched, Evolver::QFTQuadratic);
    for (int k = 0; k < sched.steps; ++k) {
        const double fbar =
            ramp_average(sched.ramp, static_cast<double>(k) / sched.steps, static_cast<double>(k + 1) / sched.steps);
        Vector phase = (Complex{0.0, -dt * fbar} * v.matrix().diagonal()).array().exp();
        psi = u_kin.matrix() * (phase.asDiagonal() * psi);
    }
    EXPECT_NEAR(trace.records.back().exp_t, expectation(psi, tq), 1e-9);
    EXPECT_NEAR(trace.records.back().exp_v, expectation(psi, v), 1e-9);
}

TEST(Evolve, QuadraticKineticSpectrum) {
    const auto spec = section_spec(3);
    const HermitianEigen eig(quadratic_kinetic_operator(spec));
    std::vector<double> expected;
    const double a = spec.units.spacing_natural();
    for (int k = -4; k < 4; ++k) {
        const double p = 2.0 * std::numbers::pi * k / (8.0 * a);
        expected.push_back(p * p / (2.0 * 140.0));
    }
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 8; ++i) {
        EXPECT_NEAR(eig.eigenvalues()(i), expected[static_cast<std::size_t>(i)], 1e-9);
    }
}

TEST(Evolve, SectionRunMeetsThresholdsAndPreservesNorm) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const Schedule sched{10.0, 2000};
    const auto exact = evolve(spec, pot, sched, Evolver::ExactMagnus);
    EXPECT_LT(exact.max_norm_drift, 1e-8);
    for (auto e : {Evolver::BRGCCircuit, Evolver::BinaryCircuit}) {
        const auto tr = evolve(spec, pot, sched, e);
        EXPECT_LT(tr.max_norm_drift, 1e-8);
        EXPECT_LT(relative_error(tr.records.back().exp_t, exact.records.back().exp_t), 7e-4) << to_string(e);
        EXPECT_LT(relative_error(tr.records.back().exp_v, exact.records.back().exp_v), 1.6e-4) << to_string(e);
    }
    // The quadratic-dispersion evolution follows a visibly different curve.
    const auto q = evolve(spec, pot, sched, Evolver::QFTQuadratic);
    EXPECT_GT(trace_deviation(q, exact), 0.1);
}

TEST(Evolve, HalvingStepQuartersDeviation) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    auto deviation = [&](int steps) {
        const Schedule sched{10.0, steps};
        return trace_deviation(evolve(spec, pot, sched, Evolver::BRGCCircuit),
                               evolve(spec, pot, sched, Evolver::ExactMagnus));
    };
    const double ratio = deviation(2000) / deviation(4000);
    EXPECT_GE(ratio, 3.5);
    EXPECT_LE(ratio, 4.5);
}

TEST(Evolve, Validation) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    EXPECT_THROW((void)evolve(spec, pot, {10.0, 0}, Evolver::ExactMagnus), InvalidInput);
    EXPECT_THROW((void)evolve(spec, pot, {-1.0, 10}, Evolver::ExactMagnus), InvalidInput);
    EXPECT_THROW((void)evolve(spec, pot, {1.0, 10}, Evolver::ExactMagnus, {Complex{1.0}}), InvalidInput);
    EXPECT_THROW((void)evolve(spec, pot, {1.0, 10}, Evolver::ExactMagnus, std::vector<Complex>(4, Complex{1.0})),
                 InvalidInput);
    const LatticeSpec one{1, PhysicalUnits(140.0, 5.0)};
    EXPECT_THROW((void)evolve(one, step_well(one, -10.0, 10.0), {1.0, 10}, Evolver::BRGCCircuit), InvalidInput);
    const LatticeSpec nine{9, PhysicalUnits(140.0, 5.0)};
    EXPECT_THROW((void)evolve(nine, step_well(nine, -10.0, 10.0), {1.0, 1}, Evolver::BinaryCircuit), InvalidInput);
    EXPECT_THROW((void)parse_evolver("magic"), InvalidInput);
}

TEST(Commutator, SectionValue) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const double norm = commutator_TV_norm(spec, pot);
    EXPECT_NEAR(norm, 111.3, 0.01 * 111.3);
    // Closed form for the balanced four-site well: 20 MeV / (2 M a^2).
    EXPECT_NEAR(norm, 20.0 * spec.units.hopping_scale(), 1e-9);
    EXPECT_NEAR(commutator_TV_norm(spec, pot, CodeKind::Binary), norm, 1e-10);
    const double fd = 2.0 * std::pow(spec.units.hopping_scale(), 2);
    EXPECT_GT(norm, fd);
}

TEST(Commutator, ScalarPotentialCommutes) {
    const auto spec = section_spec(3);
    const Potential flat{PotentialKind::StepWell, 3.0, 1.0, std::vector<double>(8, 3.0)};
    EXPECT_LT(commutator_TV_norm(spec, flat), 1e-12);
}

TEST(Output, TraceCsvAndDescription) {
    const auto spec = section_spec();
    const auto pot = section_well(spec);
    const Schedule sched{1.0, 2};
    std::ostringstream out;
    write_trace_csv(out, {evolve(spec, pot, sched, Evolver::ExactMagnus)});
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "step,time_MeVinv,evolver,expT_MeV,expV_MeV");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
    const auto j = describe(spec, pot, sched);
    EXPECT_EQ(j.at("steps").get<int>(), 2);
    EXPECT_EQ(j.at("ramp").get<std::string>(), "nested-sin2");
}

} // namespace
} // namespace graylap

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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "graylap/numerics.hpp"

namespace graylap {
namespace {

Matrix random_matrix(Eigen::Index dim, std::mt19937 &rng) {
    std::normal_distribution<double> g;
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex{g(rng), g(rng)};
        }
    }
    return m;
}

Matrix random_hermitian(Eigen::Index dim, std::mt19937 &rng) {
    const Matrix a = random_matrix(dim, rng);
    return 0.5 * (a + a.adjoint());
}

// Truncated Taylor series with scaling and squaring, independent of the
// eigendecomposition path.
Matrix taylor_expm(const Matrix &a) {
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const Matrix scaled = a / std::pow(2.0, squarings);
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    Matrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

TEST(DenseOperator, RejectsNonPowerOfTwo) {
    EXPECT_THROW(DenseOperator(Matrix::Zero(3, 3)), InvalidInput);
    EXPECT_THROW(DenseOperator(Matrix::Zero(2, 4)), InvalidInput);
}

TEST(DenseOperator, IdentityIsUnitaryAndHermitian) {
    const auto id = DenseOperator::identity(8);
    EXPECT_TRUE(id.is_unitary());
    EXPECT_TRUE(id.is_hermitian());
    EXPECT_EQ(id.n_qubits(), 3);
}

TEST(SpectralNorm, DiagonalMatrix) {
    Matrix d = Matrix::Zero(4, 4);
    d.diagonal() << 1.0, -3.0, 2.0, 0.5;
    EXPECT_NEAR(spectral_norm(DenseOperator(d)), 3.0, 1e-12);
}

TEST(SpectralNorm, NonNormalMatchesSingularValueByPowerIteration) {
    std::mt19937 rng(7);
    const Matrix a = random_matrix(8, rng);
    // Power iteration on A^dag A as an independent estimate.
    Vector v = Vector::Ones(8);
    for (int i = 0; i < 2000; ++i) {
        v = a.adjoint() * (a * v);
        v.normalize();
    }
    const double sigma = (a * v).norm();
    EXPECT_NEAR(spectral_norm(DenseOperator(a)), sigma, 1e-9);
}

TEST(SpectralNorm, AntiHermitianPath) {
    std::mt19937 rng(11);
    const Matrix h = random_hermitian(8, rng);
    const Matrix ah = kI * h;
    EXPECT_NEAR(spectral_norm(DenseOperator(ah)), spectral_norm(DenseOperator(h)), 1e-10);
}

TEST(SpectralNorm, RejectsNonFinite) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW((void)spectral_norm(DenseOperator(m)), InvalidInput);
}

TEST(HermExpm, MatchesTaylorSeries) {
    std::mt19937 rng(3);
    for (int dim : {2, 4, 16}) {
        const Matrix h = random_hermitian(dim, rng);
        const DenseOperator u = herm_expm(DenseOperator(h), Complex{0.0, -0.7});
        const Matrix ref = taylor_expm(Complex{0.0, -0.7} * h);
        EXPECT_LT((u.matrix() - ref).cwiseAbs().maxCoeff(), 1e-10) << "dim " << dim;
        EXPECT_TRUE(u.is_unitary());
    }
}

TEST(HermExpm, RejectsNonHermitian) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW((void)herm_expm(DenseOperator(m), Complex{0, 1}), InvalidInput);
}

TEST(GlobalPhaseDistance, ZeroForPhaseMultiple) {
    std::mt19937 rng(5);
    const DenseOperator u = herm_expm(DenseOperator(random_hermitian(8, rng)), Complex{0, 1});
    const DenseOperator v = std::polar(1.0, 1.234) * u;
    EXPECT_LT(distance_upto_global_phase(u, v), 1e-10);
}

TEST(GlobalPhaseDistance, MatchesGridSearchOracle) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const DenseOperator u = herm_expm(DenseOperator(random_hermitian(4, rng)), Complex{0, 0.3});
        const DenseOperator v = herm_expm(DenseOperator(random_hermitian(4, rng)), Complex{0, 0.3});
        // Coarse scan, then refine around the best phase.
        auto dist = [&](double phi) { return spectral_norm(u - std::polar(1.0, phi) * v); };
        double best_phi = 0.0;
        double best = dist(0.0);
        for (int i = 1; i < 720; ++i) {
            const double phi = 2.0 * std::numbers::pi * i / 720.0;
            if (const double d = dist(phi); d < best) {
                best = d;
                best_phi = phi;
            }
        }
        double step = 2.0 * std::numbers::pi / 720.0;
        for (int level = 0; level < 40; ++level) {
            for (double cand : {best_phi - step, best_phi + step}) {
                if (const double d = dist(cand); d < best) {
                    best = d;
                    best_phi = cand;
                }
            }
            step /= 2.0;
        }
        EXPECT_NEAR(distance_upto_global_phase(u, v), best, 1e-9);
    }
}

TEST(GlobalPhaseDistance, RejectsNonUnitary) {
    const DenseOperator z = DenseOperator::zero(2);
    EXPECT_THROW((void)distance_upto_global_phase(z, DenseOperator::identity(2)), InvalidInput);
}

TEST(StateVector, UniformIsNormalized) {
    EXPECT_NEAR(StateVector::uniform(5).norm_squared(), 1.0, 1e-14);
    EXPECT_THROW((void)StateVector::basis(2, 4), InvalidInput);
}

TEST(PhysicalUnits, HoppingScale) {
    const PhysicalUnits u(140.0, 5.0);
    const double a = 5.0 / 197.3269804;
    EXPECT_NEAR(u.hopping_scale(), 1.0 / (2.0 * 140.0 * a * a), 1e-12);
    EXPECT_THROW(PhysicalUnits(-1.0, 1.0), InvalidInput);
    EXPECT_THROW(PhysicalUnits(1.0, 0.0), InvalidInput);
}

} // namespace
} // namespace graylap

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

#include "graylap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace graylap {

namespace {

void require_same_dim(const DenseOperator &a, const DenseOperator &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                           " vs " + std::to_string(b.dim()) + ")");
    }
}

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw InvalidInput("DenseOperator: matrix is not square");
    }
    if (!is_power_of_two(static_cast<std::size_t>(m_.rows()))) {
        throw InvalidInput("DenseOperator: dimension " + std::to_string(m_.rows()) +
                           " is not a power of two");
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return DenseOperator(Matrix::Identity(d, d));
}

DenseOperator DenseOperator::zero(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return DenseOperator(Matrix::Zero(d, d));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(m_.adjoint()); }

bool DenseOperator::is_hermitian(double tol) const {
    return max_abs(m_ - m_.adjoint()) <= tol * std::max(1.0, max_abs(m_));
}

bool DenseOperator::is_unitary(double tol) const {
    const Matrix prod = m_.adjoint() * m_;
    return max_abs(prod - Matrix::Identity(m_.rows(), m_.cols())) <= tol;
}

bool DenseOperator::all_finite() const { return m_.allFinite(); }

double DenseOperator::max_abs_diff(const DenseOperator &other) const {
    require_same_dim(*this, other, "max_abs_diff");
    return max_abs(m_ - other.m_);
}

DenseOperator &DenseOperator::operator+=(const DenseOperator &rhs) {
    require_same_dim(*this, rhs, "operator+");
    m_ += rhs.m_;
    return *this;
}

DenseOperator &DenseOperator::operator-=(const DenseOperator &rhs) {
    require_same_dim(*this, rhs, "operator-");
    m_ -= rhs.m_;
    return *this;
}

DenseOperator &DenseOperator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "operator*");
    return DenseOperator(a.m_ * b.m_);
}

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "commutator");
    return DenseOperator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

// --- StateVector ---------------------------------------------------------

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw InvalidInput("StateVector: qubit count out of range");
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InvalidInput("StateVector: expected 2^n amplitudes");
    }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 0 || n_qubits > 30 || index >= (std::uint64_t{1} << n_qubits)) {
        throw InvalidInput("StateVector::basis: index out of range");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::uniform(int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    return StateVector(n_qubits,
                       std::vector<Complex>(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0}));
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

Vector StateVector::to_eigen() const {
    return Eigen::Map<const Vector>(amps_.data(), static_cast<Eigen::Index>(amps_.size()));
}

Complex StateVector::expectation(const DenseOperator &op) const {
    if (op.dim() != amps_.size()) {
        throw InvalidInput("expectation: operator/state dimension mismatch");
    }
    const Vector psi = to_eigen();
    return psi.dot(op.matrix() * psi);
}

// --- PhysicalUnits -------------------------------------------------------

PhysicalUnits::PhysicalUnits(double mass, double spacing) : mass_mev(mass), spacing_fm(spacing) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw InvalidInput("PhysicalUnits: mass must be positive");
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw InvalidInput("PhysicalUnits: lattice spacing must be positive");
    }
}

double PhysicalUnits::hopping_scale() const {
    const double a = spacing_natural();
    return 1.0 / (2.0 * mass_mev * a * a);
}

// --- norms and functions -------------------------------------------------

double spectral_norm(const DenseOperator &m) {
    if (!m.all_finite()) {
        throw InvalidInput("spectral_norm: non-finite entries");
    }
    const Matrix &a = m.matrix();
    const double scale = std::max(1.0, max_abs(a));
    const Matrix adj = a.adjoint();
    if (max_abs(a - adj) <= kHermTol * scale) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    if (max_abs(a + adj) <= kHermTol * scale) {
        const Matrix h = kI * a;
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

HermitianEigen::HermitianEigen(const DenseOperator &h) {
    if (!h.all_finite()) {
        throw InvalidInput("HermitianEigen: non-finite entries");
    }
    if (!h.is_hermitian()) {
        throw InvalidInput("HermitianEigen: operator is not Hermitian");
    }
    // Symmetrize so rounding in the input cannot leak into the eigenvectors.
    const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    values_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

DenseOperator HermitianEigen::expm(Complex scale) const {
    if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
        throw InvalidInput("herm_expm: non-finite scale");
    }
    Vector phases(values_.size());
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
        phases(i) = std::exp(scale * values_(i));
    }
    return DenseOperator(vectors_ * phases.asDiagonal() * vectors_.adjoint());
}

DenseOperator herm_expm(const DenseOperator &h, Complex scale) { return HermitianEigen(h).expm(scale); }

double distance_upto_global_phase(const DenseOperator &u, const DenseOperator &v) {
    require_same_dim(u, v, "distance_upto_global_phase");
    if (!u.is_unitary(1e-8) || !v.is_unitary(1e-8)) {
        throw InvalidInput("distance_upto_global_phase: inputs must be unitary");
    }
    const Matrix w = v.matrix().adjoint() * u.matrix();
    Eigen::ComplexEigenSolver<Matrix> es(w, false);
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        angles.push_back(std::arg(es.eigenvalues()(i)));
    }
    std::sort(angles.begin(), angles.end());

    // Shortest covering arc = full circle minus the widest gap between
    // consecutive eigenphases (including the wraparound gap).
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double widest_gap = angles.front() + two_pi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) {
        widest_gap = std::max(widest_gap, angles[i] - angles[i - 1]);
    }
    const double arc = std::max(0.0, two_pi - widest_gap);
    // Farthest eigenphase sits arc/2 from the centre; chord = 2 sin(arc/4).
    return 2.0 * std::sin(arc / 4.0);
}

} // namespace graylap

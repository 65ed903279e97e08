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
 * Dense complex linear algebra used as ground truth by every other module:
 * operators on qubit registers, state vectors, norms, and matrix functions.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace graylap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Operator-equality tolerance shared by the whole suite.
inline constexpr double kEqTol = 1e-10;
/// Entrywise Hermiticity tolerance.
inline constexpr double kHermTol = 1e-12;
/// Largest register handled by dense oracles (2^10 = 1024).
inline constexpr int kMaxDenseQubits = 10;

inline constexpr Complex kI{0.0, 1.0};

/// Rejected argument: out-of-range sizes, non-finite data, mismatched shapes.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds what the dense representation supports.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Returns true when `dim` is a positive power of two.
[[nodiscard]] constexpr bool is_power_of_two(std::size_t dim) {
    return dim != 0 && (dim & (dim - 1)) == 0;
}

/// Base-2 logarithm of a power of two.
[[nodiscard]] constexpr int log2_exact(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

/**
 * Square complex matrix acting on a 2^m-dimensional qubit space.
 *
 * Entries are stored in an Eigen matrix. The constructor enforces the
 * power-of-two shape; everything else is a thin value wrapper.
 */
class DenseOperator {
  public:
    explicit DenseOperator(Matrix m);

    [[nodiscard]] static DenseOperator identity(std::size_t dim);
    [[nodiscard]] static DenseOperator zero(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] int n_qubits() const { return log2_exact(dim()); }
    [[nodiscard]] const Matrix &matrix() const { return m_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    [[nodiscard]] DenseOperator adjoint() const;
    [[nodiscard]] bool is_hermitian(double tol = kHermTol) const;
    [[nodiscard]] bool is_unitary(double tol = kEqTol) const;
    [[nodiscard]] bool all_finite() const;

    /// Largest entrywise modulus of (this - other).
    [[nodiscard]] double max_abs_diff(const DenseOperator &other) const;

    DenseOperator &operator+=(const DenseOperator &rhs);
    DenseOperator &operator-=(const DenseOperator &rhs);
    DenseOperator &operator*=(Complex s);

    friend DenseOperator operator+(DenseOperator a, const DenseOperator &b) { return a += b; }
    friend DenseOperator operator-(DenseOperator a, const DenseOperator &b) { return a -= b; }
    friend DenseOperator operator*(Complex s, DenseOperator a) { return a *= s; }
    friend DenseOperator operator*(DenseOperator a, Complex s) { return a *= s; }
    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

  private:
    Matrix m_;
};

/// [a, b] = ab - ba.
[[nodiscard]] DenseOperator commutator(const DenseOperator &a, const DenseOperator &b);

/// Normalized amplitude vector over the 2^n computational basis states.
class StateVector {
  public:
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    /// |index> on n qubits.
    [[nodiscard]] static StateVector basis(int n_qubits, std::uint64_t index);
    /// Uniform superposition, the tensor product of |+> on every qubit.
    [[nodiscard]] static StateVector uniform(int n_qubits);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const { return amps_; }
    [[nodiscard]] std::vector<Complex> &amplitudes() { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] Vector to_eigen() const;

    /// <psi|op|psi> for an operator of matching dimension.
    [[nodiscard]] Complex expectation(const DenseOperator &op) const;

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/**
 * Mass and lattice spacing of a single particle, natural units internally.
 * Lengths enter in fm and are converted once with hbar*c.
 */
struct PhysicalUnits {
    static constexpr double kHbarC = 197.3269804; // MeV fm

    double mass_mev;
    double spacing_fm;

    PhysicalUnits(double mass_mev, double spacing_fm);

    /// Lattice spacing in MeV^-1.
    [[nodiscard]] double spacing_natural() const { return spacing_fm / kHbarC; }
    /// 1 / (2 M a^2) in MeV, the hopping energy scale.
    [[nodiscard]] double hopping_scale() const;
};

/// Largest singular value. Hermitian and anti-Hermitian inputs go through
/// the symmetric eigensolver; everything else through a dense SVD.
[[nodiscard]] double spectral_norm(const DenseOperator &m);

/// Eigendecomposition of a Hermitian operator, reusable for many exponentials.
class HermitianEigen {
  public:
    explicit HermitianEigen(const DenseOperator &h);

    [[nodiscard]] const Eigen::VectorXd &eigenvalues() const { return values_; }
    [[nodiscard]] const Matrix &eigenvectors() const { return vectors_; }

    /// exp(scale * H).
    [[nodiscard]] DenseOperator expm(Complex scale) const;

  private:
    Eigen::VectorXd values_;
    Matrix vectors_;
};

/// exp(scale * H) for Hermitian H, via eigendecomposition.
[[nodiscard]] DenseOperator herm_expm(const DenseOperator &h, Complex scale);

/**
 * min over phi of ||U - e^{i phi} V||_2 for unitary U, V.
 *
 * U - e^{i phi} V = V (W - e^{i phi}) with W = V^dag U unitary and hence
 * normal, so the norm is the largest chord from e^{i phi} to the spectrum of
 * W. The optimum sits at the centre of the shortest arc covering all
 * eigenphases; no search is needed.
 */
[[nodiscard]] double distance_upto_global_phase(const DenseOperator &u, const DenseOperator &v);

} // namespace graylap

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
 * Dense embeddings of single-qubit factors and weighted Pauli strings.
 */
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "graylap/numerics.hpp"

namespace graylap {

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

namespace mat2 {
inline constexpr Mat2 kI{Complex{1}, Complex{0}, Complex{0}, Complex{1}};
inline constexpr Mat2 kX{Complex{0}, Complex{1}, Complex{1}, Complex{0}};
inline constexpr Mat2 kY{Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}};
inline constexpr Mat2 kZ{Complex{1}, Complex{0}, Complex{0}, Complex{-1}};
/// |0><0|
inline constexpr Mat2 kP0{Complex{1}, Complex{0}, Complex{0}, Complex{0}};
/// |1><1|
inline constexpr Mat2 kP1{Complex{0}, Complex{0}, Complex{0}, Complex{1}};
/// X P0 = |1><0|
inline constexpr Mat2 kXP0{Complex{0}, Complex{0}, Complex{1}, Complex{0}};
/// X P1 = |0><1|
inline constexpr Mat2 kXP1{Complex{0}, Complex{1}, Complex{0}, Complex{0}};
} // namespace mat2

/// One single-qubit factor of a tensor product.
struct Factor {
    int qubit;
    Mat2 m;
};

/// Dense 2^n operator for the tensor product of the given factors
/// (identity on every unlisted qubit). Qubits must be distinct.
[[nodiscard]] DenseOperator product_operator(int n, const std::vector<Factor> &factors);
[[nodiscard]] DenseOperator product_operator(int n, std::initializer_list<Factor> factors);

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Real-weighted tensor product of Pauli factors, one label per qubit.
class PauliString {
  public:
    PauliString(double coefficient, std::vector<Pauli> factors);

    [[nodiscard]] double coefficient() const { return coeff_; }
    [[nodiscard]] const std::vector<Pauli> &factors() const { return factors_; }
    [[nodiscard]] int n_qubits() const { return static_cast<int>(factors_.size()); }
    [[nodiscard]] Pauli at(int qubit) const { return factors_[static_cast<std::size_t>(qubit)]; }
    [[nodiscard]] int weight() const;

    /// Bits where the factor flips the computational state (X or Y).
    [[nodiscard]] std::uint64_t flip_mask() const;
    /// Bits carrying a Y or Z factor.
    [[nodiscard]] std::uint64_t phase_mask() const;

    /// Label such as "XYI" written qubit n-1 first, like the tensor product.
    [[nodiscard]] std::string label() const;

    /// Dense operator including the coefficient.
    [[nodiscard]] DenseOperator to_operator() const;

    /// Unit-coefficient string applied to |basis>: returns (phase, image).
    [[nodiscard]] std::pair<Complex, std::uint64_t> act_on_basis(std::uint64_t basis) const;

  private:
    double coeff_;
    std::vector<Pauli> factors_;
};

/// exp(i theta P) for a unit-coefficient Pauli string P, left-multiplied
/// into `m` in place: m <- exp(i theta P) m. Uses P^2 = 1, no dense exponential.
void apply_pauli_exponential(Matrix &m, const PauliString &p, double theta);

} // namespace graylap

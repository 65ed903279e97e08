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
 * Periodic one-dimensional lattice Laplacian: the exact neighbour-sum
 * (adjacency) and its Gray-code and binary qubit decompositions.
 *
 * Encoded Laplacians carry the neighbour sum only. The -2 * identity part
 * of the finite-difference stencil is a global phase under exponentiation
 * and is added back explicitly by `kinetic_operator`.
 *
 * Formulas are written in bit-significance labels (label k = codeword bit
 * of significance k) and placed on physical qubits through `BitLayout`.
 */
#pragma once

#include <vector>

#include "graylap/encoding.hpp"
#include "graylap/numerics.hpp"
#include "graylap/qubit_ops.hpp"

namespace graylap {

/// Periodic lattice with 2^n sites and a particle of given mass.
struct LatticeSpec {
    int n;
    PhysicalUnits units;

    [[nodiscard]] std::size_t sites() const { return std::size_t{1} << n; }
};

/// One Gray-code term G_k on n qubits.
struct GrayTerm {
    int n;
    int k;
    DenseOperator op;
};

/// Position-ordered 0/1 circulant neighbour matrix. For n=1 both neighbours
/// coincide and the matrix is 2 sigma^x, matching G_0.
[[nodiscard]] DenseOperator adjacency_exact(int n);

/// G_k = (X_k - X_{k-1}) prod_{i<=k-2} P0_i for k>=1, G_0 = 2 X_0.
[[nodiscard]] DenseOperator gray_term(int n, int k, BitOrder order = kDefaultBitOrder);

struct BrgcLaplacian {
    DenseOperator total;
    std::vector<GrayTerm> terms;
};

/// Sum of G_k, k = 0..n-1.
[[nodiscard]] BrgcLaplacian brgc_laplacian(int n, BitOrder order = kDefaultBitOrder);

struct BinaryLaplacian {
    DenseOperator total;
    /// B_1 .. B_n in order.
    std::vector<DenseOperator> terms;
    DenseOperator off_diagonal;
    DenseOperator diagonal;
};

/// Sum of B_l = (X_{l-1} - 1)(prod X_i P0_i + prod X_i P1_i), B_1 = 2 X_0.
[[nodiscard]] BinaryLaplacian binary_laplacian(int n, BitOrder order = kDefaultBitOrder);

/**
 * Real-coefficient Pauli decomposition of the binary Laplacian.
 *
 * Strings are in expansion order: B_1 first, then for each l the even
 * Y-subsets of the carry product in ascending bitmask order, the
 * X_{l-1}-carrying string before its partner. Like terms merge into the
 * position of their first appearance; exact zeros are dropped.
 */
[[nodiscard]] std::vector<PauliString> pauli_expand_binary(int n, BitOrder order = kDefaultBitOrder);

/// Dense sum of coefficient-weighted strings.
[[nodiscard]] DenseOperator sum_pauli_strings(const std::vector<PauliString> &strings);

/// T = -(A_enc - 2) / (2 M a^2) in MeV, in the encoded basis.
[[nodiscard]] DenseOperator kinetic_operator(const LatticeSpec &spec, CodeKind code,
                                             BitOrder order = kDefaultBitOrder);

/// Printed two- and three-qubit binary expansions, in physical qubit labels.
[[nodiscard]] DenseOperator printed_binary_expansion(int n);
/// Printed two-qubit Gray expansion X_1 + X_0.
[[nodiscard]] DenseOperator printed_brgc_expansion_n2();

/// Returns the unique bit order under which the printed expansions equal
/// Pi * A * Pi^T. Throws std::logic_error if zero or two conventions pass.
[[nodiscard]] BitOrder calibrate_bit_order();

} // namespace graylap

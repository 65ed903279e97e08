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
 * Position codes (plain binary and binary reflected Gray code) and the
 * permutations tying encoded operators to lattice positions.
 *
 * Basis-index convention: qubit q is bit q of the computational-basis index,
 * so qubit 0 is the rightmost tensor factor. The bit-order convention picks
 * which qubit carries which significance of the position codeword.
 */
#pragma once

#include <cstdint>
#include <string_view>

#include "graylap/numerics.hpp"

namespace graylap {

enum class CodeKind { Binary, BRGC };

enum class BitOrder {
    /// Qubit q holds codeword bit of significance q.
    LowSignificance,
    /// Qubit q holds codeword bit of significance n-1-q.
    HighSignificance,
};

/// Convention under which the printed two- and three-qubit Laplacian
/// expansions match the brute-force adjacency verbatim. Pinned by a
/// calibration test (see `calibrate_bit_order` in laplacian.hpp).
inline constexpr BitOrder kDefaultBitOrder = BitOrder::HighSignificance;

[[nodiscard]] std::string_view to_string(CodeKind code);
[[nodiscard]] std::string_view to_string(BitOrder order);
[[nodiscard]] CodeKind parse_code_kind(std::string_view text);
[[nodiscard]] BitOrder parse_bit_order(std::string_view text);

/// Maps codeword significance to physical qubit for an n-qubit register.
struct BitLayout {
    int n;
    BitOrder order;

    [[nodiscard]] constexpr int qubit(int significance) const {
        return order == BitOrder::LowSignificance ? significance : n - 1 - significance;
    }
};

/// BRGC codeword of rank b.
[[nodiscard]] constexpr std::uint64_t bin_to_gray(std::uint64_t b) { return b ^ (b >> 1); }

/// Rank of BRGC codeword g.
[[nodiscard]] constexpr std::uint64_t gray_to_bin(std::uint64_t g) {
    for (std::uint64_t shift = 1; shift < 64; shift <<= 1) {
        g ^= g >> shift;
    }
    return g;
}

/// Codeword of position r under the given code.
[[nodiscard]] constexpr std::uint64_t codeword(std::uint64_t r, CodeKind code) {
    return code == CodeKind::BRGC ? bin_to_gray(r) : r;
}

/// Computational-basis index of position r on n qubits.
[[nodiscard]] std::uint64_t basis_index(std::uint64_t position, int n, CodeKind code, BitOrder order);

/// Position encoded by a computational-basis index (inverse of basis_index).
[[nodiscard]] std::uint64_t position_of(std::uint64_t basis, int n, CodeKind code, BitOrder order);

/// Permutation matrix with Pi[basis_index(r), r] = 1, so that
/// Pi * A * Pi^T expresses a position-ordered operator in the encoding.
[[nodiscard]] DenseOperator position_permutation(int n, CodeKind code, BitOrder order);

/// Re-expresses a position-ordered operator in the encoded basis.
[[nodiscard]] DenseOperator to_encoded_basis(const DenseOperator &position_op, CodeKind code,
                                             BitOrder order);

} // namespace graylap

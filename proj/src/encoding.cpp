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

#include "graylap/encoding.hpp"

#include <string>

namespace graylap {

std::string_view to_string(CodeKind code) { return code == CodeKind::BRGC ? "brgc" : "binary"; }

std::string_view to_string(BitOrder order) {
    return order == BitOrder::LowSignificance ? "low-significance" : "high-significance";
}

CodeKind parse_code_kind(std::string_view text) {
    if (text == "brgc") {
        return CodeKind::BRGC;
    }
    if (text == "binary") {
        return CodeKind::Binary;
    }
    throw InvalidInput("unknown code '" + std::string(text) + "' (expected brgc or binary)");
}

BitOrder parse_bit_order(std::string_view text) {
    if (text == "low-significance" || text == "low") {
        return BitOrder::LowSignificance;
    }
    if (text == "high-significance" || text == "high") {
        return BitOrder::HighSignificance;
    }
    throw InvalidInput("unknown bit order '" + std::string(text) + "'");
}

namespace {

void check_register(int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw InvalidInput("qubit count " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxDenseQubits) + "]");
    }
}

// Moves bit k of `word` to bit layout.qubit(k).
std::uint64_t scatter_bits(std::uint64_t word, BitLayout layout) {
    std::uint64_t out = 0;
    for (int k = 0; k < layout.n; ++k) {
        out |= ((word >> k) & 1U) << layout.qubit(k);
    }
    return out;
}

std::uint64_t gather_bits(std::uint64_t basis, BitLayout layout) {
    std::uint64_t out = 0;
    for (int k = 0; k < layout.n; ++k) {
        out |= ((basis >> layout.qubit(k)) & 1U) << k;
    }
    return out;
}

} // namespace

std::uint64_t basis_index(std::uint64_t position, int n, CodeKind code, BitOrder order) {
    return scatter_bits(codeword(position, code), BitLayout{n, order});
}

std::uint64_t position_of(std::uint64_t basis, int n, CodeKind code, BitOrder order) {
    const std::uint64_t word = gather_bits(basis, BitLayout{n, order});
    return code == CodeKind::BRGC ? gray_to_bin(word) : word;
}

DenseOperator position_permutation(int n, CodeKind code, BitOrder order) {
    check_register(n);
    const auto dim = Eigen::Index{1} << n;
    Matrix pi = Matrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        pi(static_cast<Eigen::Index>(basis_index(static_cast<std::uint64_t>(r), n, code, order)), r) = 1.0;
    }
    return DenseOperator(std::move(pi));
}

DenseOperator to_encoded_basis(const DenseOperator &position_op, CodeKind code, BitOrder order) {
    const DenseOperator pi = position_permutation(position_op.n_qubits(), code, order);
    return DenseOperator(pi.matrix() * position_op.matrix() * pi.matrix().transpose());
}

} // namespace graylap

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

#include "graylap/laplacian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace graylap {

namespace {

void check_register(int n, int lo = 1) {
    if (n < lo || n > kMaxDenseQubits) {
        throw InvalidInput("qubit count " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(kMaxDenseQubits) + "]");
    }
}

} // namespace

DenseOperator adjacency_exact(int n) {
    check_register(n);
    const auto dim = Eigen::Index{1} << n;
    Matrix a = Matrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        // += so that N=2, where r+1 and r-1 coincide, gets weight 2.
        a(r, (r + 1) % dim) += 1.0;
        a(r, (r + dim - 1) % dim) += 1.0;
    }
    return DenseOperator(std::move(a));
}

DenseOperator gray_term(int n, int k, BitOrder order) {
    check_register(n);
    if (k < 0 || k >= n) {
        throw InvalidInput("gray_term: k outside [0, n)");
    }
    const BitLayout layout{n, order};
    if (k == 0) {
        return Complex{2.0} * product_operator(n, {{layout.qubit(0), mat2::kX}});
    }
    std::vector<Factor> projectors;
    for (int i = 0; i <= k - 2; ++i) {
        projectors.push_back({layout.qubit(i), mat2::kP0});
    }
    auto upper = projectors;
    upper.push_back({layout.qubit(k), mat2::kX});
    auto lower = projectors;
    lower.push_back({layout.qubit(k - 1), mat2::kX});
    return product_operator(n, upper) - product_operator(n, lower);
}

BrgcLaplacian brgc_laplacian(int n, BitOrder order) {
    check_register(n);
    const std::size_t dim = std::size_t{1} << n;
    BrgcLaplacian out{DenseOperator::zero(dim), {}};
    for (int k = 0; k < n; ++k) {
        out.terms.push_back({n, k, gray_term(n, k, order)});
        out.total += out.terms.back().op;
    }
    return out;
}

BinaryLaplacian binary_laplacian(int n, BitOrder order) {
    check_register(n);
    const BitLayout layout{n, order};
    const std::size_t dim = std::size_t{1} << n;
    std::vector<DenseOperator> terms;
    terms.push_back(Complex{2.0} * product_operator(n, {{layout.qubit(0), mat2::kX}}));
    for (int l = 2; l <= n; ++l) {
        std::vector<Factor> down;
        std::vector<Factor> up;
        for (int i = 0; i <= l - 2; ++i) {
            down.push_back({layout.qubit(i), mat2::kXP0});
            up.push_back({layout.qubit(i), mat2::kXP1});
        }
        const DenseOperator carry = product_operator(n, down) + product_operator(n, up);
        const DenseOperator flip =
            product_operator(n, {{layout.qubit(l - 1), mat2::kX}}) - DenseOperator::identity(dim);
        terms.push_back(flip * carry);
    }
    DenseOperator total = DenseOperator::zero(dim);
    for (const auto &t : terms) {
        total += t;
    }
    const Matrix diag = total.matrix().diagonal().asDiagonal();
    DenseOperator diagonal(diag);
    DenseOperator off = total - diagonal;
    return {std::move(total), std::move(terms), std::move(off), std::move(diagonal)};
}

std::vector<PauliString> pauli_expand_binary(int n, BitOrder order) {
    check_register(n, 2);
    const BitLayout layout{n, order};

    // Strings are pure X/Y products; key = (support, y_bits) in significance labels.
    struct Entry {
        std::uint64_t support;
        std::uint64_t ys;
        double coeff;
    };
    std::vector<Entry> entries;
    std::unordered_map<std::uint64_t, std::size_t> index;
    auto add = [&](std::uint64_t support, std::uint64_t ys, double c) {
        const std::uint64_t key = (support << 32) | ys;
        if (auto it = index.find(key); it != index.end()) {
            entries[it->second].coeff += c;
        } else {
            index.emplace(key, entries.size());
            entries.push_back({support, ys, c});
        }
    };

    add(1U, 0U, 2.0);
    for (int l = 2; l <= n; ++l) {
        // prod_{i<m} |1><0| + prod |0><1| = 2^{1-m} sum_{even S} (-1)^{|S|/2} X..Y_S..
        const int m = l - 1;
        const std::uint64_t low = (std::uint64_t{1} << m) - 1;
        const std::uint64_t top = std::uint64_t{1} << (l - 1);
        for (std::uint64_t s = 0; s <= low; ++s) {
            const int ny = std::popcount(s);
            if (ny % 2 != 0) {
                continue;
            }
            const double c = ((ny / 2) % 2 == 0 ? 2.0 : -2.0) / static_cast<double>(std::uint64_t{1} << m);
            add(low | top, s, c);
            add(low, s, -c);
        }
    }

    std::vector<PauliString> out;
    for (const auto &e : entries) {
        if (std::abs(e.coeff) < 1e-15) {
            continue;
        }
        std::vector<Pauli> factors(static_cast<std::size_t>(n), Pauli::I);
        for (int k = 0; k < n; ++k) {
            if ((e.support >> k) & 1U) {
                factors[static_cast<std::size_t>(layout.qubit(k))] = ((e.ys >> k) & 1U) ? Pauli::Y : Pauli::X;
            }
        }
        out.emplace_back(e.coeff, std::move(factors));
    }
    return out;
}

DenseOperator sum_pauli_strings(const std::vector<PauliString> &strings) {
    if (strings.empty()) {
        throw InvalidInput("sum_pauli_strings: empty list");
    }
    DenseOperator total = DenseOperator::zero(std::size_t{1} << strings.front().n_qubits());
    for (const auto &s : strings) {
        total += s.to_operator();
    }
    return total;
}

DenseOperator kinetic_operator(const LatticeSpec &spec, CodeKind code, BitOrder order) {
    const DenseOperator a = to_encoded_basis(adjacency_exact(spec.n), code, order);
    const DenseOperator shifted = a - Complex{2.0} * DenseOperator::identity(spec.sites());
    return Complex{-spec.units.hopping_scale()} * shifted;
}

DenseOperator printed_binary_expansion(int n) {
    if (n == 2) {
        // X_1 + X_0 X_1
        return product_operator(2, {{1, mat2::kX}}) + product_operator(2, {{0, mat2::kX}, {1, mat2::kX}});
    }
    if (n == 3) {
        // X_2 + 1/2 (X_1 + X_0 X_1) X_2 + 1/2 Y_1 Y_2 - 1/2 X_0 Y_1 Y_2
        const DenseOperator x2 = product_operator(3, {{2, mat2::kX}});
        const DenseOperator l2 =
            product_operator(3, {{1, mat2::kX}}) + product_operator(3, {{0, mat2::kX}, {1, mat2::kX}});
        return x2 + Complex{0.5} * (l2 * x2) + Complex{0.5} * product_operator(3, {{1, mat2::kY}, {2, mat2::kY}}) -
               Complex{0.5} * product_operator(3, {{0, mat2::kX}, {1, mat2::kY}, {2, mat2::kY}});
    }
    throw InvalidInput("printed_binary_expansion: only n = 2, 3 are printed");
}

DenseOperator printed_brgc_expansion_n2() {
    return product_operator(2, {{1, mat2::kX}}) + product_operator(2, {{0, mat2::kX}});
}

BitOrder calibrate_bit_order() {
    std::vector<BitOrder> passing;
    for (BitOrder order : {BitOrder::LowSignificance, BitOrder::HighSignificance}) {
        const bool gray2 = printed_brgc_expansion_n2().max_abs_diff(
                               to_encoded_basis(adjacency_exact(2), CodeKind::BRGC, order)) <= kHermTol;
        bool binary = true;
        for (int n : {2, 3}) {
            binary = binary && printed_binary_expansion(n).max_abs_diff(
                                   to_encoded_basis(adjacency_exact(n), CodeKind::Binary, order)) <= kHermTol;
        }
        if (gray2 && binary) {
            passing.push_back(order);
        }
    }
    if (passing.size() != 1) {
        throw std::logic_error("calibrate_bit_order: expected exactly one passing convention, got " +
                               std::to_string(passing.size()));
    }
    return passing.front();
}

} // namespace graylap

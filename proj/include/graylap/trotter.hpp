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
 * First-order product formulas for the encoded Laplacian, the commutator
 * algebra of the Gray-code terms, and the error sweep.
 *
 * Product order: u1_brgc is the literal matrix product
 * exp(i l G_0) exp(i l G_1) ... exp(i l G_{n-1}), so G_{n-1} acts first on a
 * state. This is the order the Trotter-step circuit applies its gates in.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "graylap/encoding.hpp"
#include "graylap/laplacian.hpp"
#include "graylap/numerics.hpp"

namespace graylap {

/// exp(i lambda G_k), built from its two-rotation closed form.
[[nodiscard]] DenseOperator gray_term_exponential(int n, int k, double lambda,
                                                  BitOrder order = kDefaultBitOrder);

/// exp(i l G_0) ... exp(i l G_{n-1}).
[[nodiscard]] DenseOperator u1_brgc(int n, double lambda, BitOrder order = kDefaultBitOrder);

/// Product of exp(i l c_s P_s) over pauli_expand_binary strings; the first
/// string acts first.
[[nodiscard]] DenseOperator u1_binary(int n, double lambda, BitOrder order = kDefaultBitOrder);

/// Sum over k < j of [G_j, G_k] by direct matrix commutators.
[[nodiscard]] DenseOperator commutator_sum(int n, int j, BitOrder order = kDefaultBitOrder);

/// i (X_j - X_{j-1}) prod_{i=1}^{j-2} P0_i Y_0.
[[nodiscard]] DenseOperator commutator_sum_closed_form(int n, int j, BitOrder order = kDefaultBitOrder);

/**
 * Closed form of a single [G_j, G_k], k < j, 2 <= j. With D = X_j - X_{j-1}:
 *   k = j-1:         -i D prod_{i<=j-3} P0_i Y_{j-2}
 *   1 <= k <= j-2:   +i D (prod_{i<=j-2, i!=k} P0_i Y_k - prod_{i<=j-2, i!=k-1} P0_i Y_{k-1})
 *   k = 0 (j >= 3):  2i D prod_{i=1}^{j-2} P0_i Y_0
 */
[[nodiscard]] DenseOperator pairwise_commutator_closed_form(int n, int j, int k,
                                                            BitOrder order = kDefaultBitOrder);

/// Spectral norm of the full sum over 2 <= j < n, k < j. Equals 2.
[[nodiscard]] double total_commutator_norm(int n);

/// Sum over j of ||sum_k [G_j, G_k]||, the triangle-inequality estimate 2(n-2).
[[nodiscard]] double triangle_commutator_bound(int n);

struct TrotterReport {
    int n;
    double lambda;
    CodeKind code;
    double error_exact;
    double bound_loose;
    double bound_tight;
};

/// ||U_1 - exp(i lambda L)||_2 for a single grid point.
[[nodiscard]] TrotterReport trotter_error(CodeKind code, int n, double lambda);

/// 13 log-spaced points from 1e-3 to 1e-1.
[[nodiscard]] std::vector<double> default_lambda_grid();

/**
 * One report per (n, lambda), ordered by n then by lambda as given.
 * Grid points run in parallel; `max_threads` <= 0 keeps the OpenMP default.
 */
[[nodiscard]] std::vector<TrotterReport> trotter_error_sweep(CodeKind code, const std::vector<int> &ns,
                                                             const std::vector<double> &lambdas,
                                                             int max_threads = 0);

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

struct CostEstimate {
    std::uint64_t steps;
    std::uint64_t total_gates;
};

/// steps = ceil(T^2 A D / eps), total_gates = steps * gates_per_step.
[[nodiscard]] CostEstimate cost_estimate(double total_time, int a, int d, double eps, int gates_per_step);

/// Columns n, lambda, code, error, bound_loose, bound_tight.
void write_trotter_csv(std::ostream &out, const std::vector<TrotterReport> &reports);

} // namespace graylap

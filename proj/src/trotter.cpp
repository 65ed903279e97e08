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

#include "graylap/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include <Eigen/SparseCore>
#include <omp.h>

#include "graylap/csv.hpp"
#include "graylap/qubit_ops.hpp"

namespace graylap {

namespace {

using Sparse = Eigen::SparseMatrix<Complex>;

void check_n(int n, int lo) {
    if (n < lo || n > kMaxDenseQubits) {
        throw InvalidInput("qubit count " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(kMaxDenseQubits) + "]");
    }
}

void check_lambda(double lambda) {
    if (!std::isfinite(lambda)) {
        throw InvalidInput("lambda must be finite");
    }
}

Mat2 rotx(double theta) {
    const Complex c{std::cos(theta), 0.0};
    const Complex s{0.0, std::sin(theta)};
    return {c, s, s, c};
}

Sparse sparse_of(const DenseOperator &op) { return op.matrix().sparseView(); }

std::vector<Sparse> sparse_terms(int n, BitOrder order) {
    std::vector<Sparse> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        g.push_back(sparse_of(gray_term(n, k, order)));
    }
    return g;
}

Sparse sparse_commutator_sum(const std::vector<Sparse> &g, int j) {
    Sparse acc(g[0].rows(), g[0].cols());
    for (int k = 0; k < j; ++k) {
        const Sparse &a = g[static_cast<std::size_t>(j)];
        const Sparse &b = g[static_cast<std::size_t>(k)];
        acc += Sparse(a * b) - Sparse(b * a);
    }
    return acc;
}

// D_j times a product of lower-qubit factors, in significance labels.
DenseOperator difference_times(int n, int j, const std::vector<std::pair<int, Mat2>> &lower, BitLayout layout) {
    std::vector<Factor> hi;
    std::vector<Factor> lo;
    for (const auto &[sig, m] : lower) {
        hi.push_back({layout.qubit(sig), m});
        lo.push_back({layout.qubit(sig), m});
    }
    hi.push_back({layout.qubit(j), mat2::kX});
    lo.push_back({layout.qubit(j - 1), mat2::kX});
    return product_operator(n, hi) - product_operator(n, lo);
}

// P0 on significances [from, to] except `skip`, then Y on `y`.
std::vector<std::pair<int, Mat2>> projectors_with_y(int from, int to, int skip, int y) {
    std::vector<std::pair<int, Mat2>> f;
    for (int i = from; i <= to; ++i) {
        if (i != skip && i != y) {
            f.emplace_back(i, mat2::kP0);
        }
    }
    f.emplace_back(y, mat2::kY);
    return f;
}

DenseOperator laplacian_total(CodeKind code, int n) {
    return code == CodeKind::BRGC ? brgc_laplacian(n).total : binary_laplacian(n).total;
}

DenseOperator u1(CodeKind code, int n, double lambda) {
    return code == CodeKind::BRGC ? u1_brgc(n, lambda) : u1_binary(n, lambda);
}

TrotterReport make_report(CodeKind code, int n, double lambda, const HermitianEigen &eig) {
    const DenseOperator exact = eig.expm(Complex{0.0, lambda});
    const double err = spectral_norm(u1(code, n, lambda) - exact);
    return {n, lambda, code, err, (n - 2) * lambda * lambda, lambda * lambda};
}

} // namespace

DenseOperator gray_term_exponential(int n, int k, double lambda, BitOrder order) {
    check_n(n, 1);
    check_lambda(lambda);
    if (k < 0 || k >= n) {
        throw InvalidInput("gray_term_exponential: k outside [0, n)");
    }
    const BitLayout layout{n, order};
    const std::size_t dim = std::size_t{1} << n;
    if (k == 0) {
        return product_operator(n, {{layout.qubit(0), rotx(2.0 * lambda)}});
    }
    // G_k = (X_k - X_{k-1}) Pi with Pi a projector commuting with both X's:
    // exp(i l G_k) = (1 - Pi) + Pi exp(i l X_k) exp(-i l X_{k-1}).
    std::vector<Factor> proj;
    for (int i = 0; i <= k - 2; ++i) {
        proj.push_back({layout.qubit(i), mat2::kP0});
    }
    auto rotated = proj;
    rotated.push_back({layout.qubit(k), rotx(lambda)});
    rotated.push_back({layout.qubit(k - 1), rotx(-lambda)});
    return DenseOperator::identity(dim) - product_operator(n, proj) + product_operator(n, rotated);
}

DenseOperator u1_brgc(int n, double lambda, BitOrder order) {
    check_n(n, 2);
    check_lambda(lambda);
    DenseOperator u = DenseOperator::identity(std::size_t{1} << n);
    for (int k = 0; k < n; ++k) {
        u = u * gray_term_exponential(n, k, lambda, order);
    }
    return u;
}

DenseOperator u1_binary(int n, double lambda, BitOrder order) {
    check_n(n, 2);
    check_lambda(lambda);
    const auto dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto &s : pauli_expand_binary(n, order)) {
        apply_pauli_exponential(m, s, lambda * s.coefficient());
    }
    return DenseOperator(std::move(m));
}

DenseOperator commutator_sum(int n, int j, BitOrder order) {
    check_n(n, 2);
    if (j < 2 || j > n - 1) {
        throw InvalidInput("commutator_sum: j outside [2, n-1]");
    }
    const auto g = sparse_terms(n, order);
    return DenseOperator(Matrix(sparse_commutator_sum(g, j)));
}

DenseOperator commutator_sum_closed_form(int n, int j, BitOrder order) {
    check_n(n, 2);
    if (j < 2 || j > n - 1) {
        throw InvalidInput("commutator_sum_closed_form: j outside [2, n-1]");
    }
    const BitLayout layout{n, order};
    return kI * difference_times(n, j, projectors_with_y(1, j - 2, -1, 0), layout);
}

DenseOperator pairwise_commutator_closed_form(int n, int j, int k, BitOrder order) {
    check_n(n, 2);
    if (j < 2 || j > n - 1 || k < 0 || k >= j) {
        throw InvalidInput("pairwise_commutator_closed_form: need 0 <= k < j, 2 <= j <= n-1");
    }
    const BitLayout layout{n, order};
    if (k == 0) {
        return Complex{0.0, 2.0} * difference_times(n, j, projectors_with_y(1, j - 2, -1, 0), layout);
    }
    if (k == j - 1) {
        return Complex{0.0, -1.0} * difference_times(n, j, projectors_with_y(0, j - 3, -1, j - 2), layout);
    }
    const DenseOperator first = difference_times(n, j, projectors_with_y(0, j - 2, k, k), layout);
    const DenseOperator second = difference_times(n, j, projectors_with_y(0, j - 2, k - 1, k - 1), layout);
    return kI * (first - second);
}

double total_commutator_norm(int n) {
    check_n(n, 3);
    const auto g = sparse_terms(n, kDefaultBitOrder);
    Sparse total(g[0].rows(), g[0].cols());
    for (int j = 2; j <= n - 1; ++j) {
        total += sparse_commutator_sum(g, j);
    }
    return spectral_norm(DenseOperator(Matrix(total)));
}

double triangle_commutator_bound(int n) {
    check_n(n, 3);
    const auto g = sparse_terms(n, kDefaultBitOrder);
    double acc = 0.0;
    for (int j = 2; j <= n - 1; ++j) {
        acc += spectral_norm(DenseOperator(Matrix(sparse_commutator_sum(g, j))));
    }
    return acc;
}

TrotterReport trotter_error(CodeKind code, int n, double lambda) {
    check_n(n, 2);
    check_lambda(lambda);
    return make_report(code, n, lambda, HermitianEigen(laplacian_total(code, n)));
}

std::vector<double> default_lambda_grid() {
    std::vector<double> grid;
    constexpr int points = 13;
    for (int i = 0; i < points; ++i) {
        grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / (points - 1)));
    }
    return grid;
}

std::vector<TrotterReport> trotter_error_sweep(CodeKind code, const std::vector<int> &ns,
                                               const std::vector<double> &lambdas, int max_threads) {
    if (ns.empty() || lambdas.empty()) {
        throw InvalidInput("trotter_error_sweep: empty range");
    }
    for (int n : ns) {
        check_n(n, 2);
    }
    for (double l : lambdas) {
        if (!(l > 0.0) || l > 0.5) {
            throw InvalidInput("trotter_error_sweep: lambda outside (0, 0.5]");
        }
    }

    // Output is ordered by (n, lambda) whatever the input order.
    std::vector<int> n_sorted(ns);
    std::sort(n_sorted.begin(), n_sorted.end());
    n_sorted.erase(std::unique(n_sorted.begin(), n_sorted.end()), n_sorted.end());
    std::vector<double> l_sorted(lambdas);
    std::sort(l_sorted.begin(), l_sorted.end());
    l_sorted.erase(std::unique(l_sorted.begin(), l_sorted.end()), l_sorted.end());

    std::map<int, HermitianEigen> eig;
    for (int n : n_sorted) {
        if (!eig.contains(n)) {
            eig.emplace(n, HermitianEigen(laplacian_total(code, n)));
        }
    }

    const auto total = static_cast<std::ptrdiff_t>(n_sorted.size() * l_sorted.size());
    std::vector<TrotterReport> out(static_cast<std::size_t>(total));
    const int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        const int n = n_sorted[i / l_sorted.size()];
        const double l = l_sorted[i % l_sorted.size()];
        out[i] = make_report(code, n, l, eig.at(n));
    }
    return out;
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidInput("loglog_slope: need at least two matching points");
    }
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw InvalidInput("loglog_slope: values must be positive");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(x.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

CostEstimate cost_estimate(double total_time, int a, int d, double eps, int gates_per_step) {
    if (!(eps > 0.0)) {
        throw InvalidInput("cost_estimate: eps must be positive");
    }
    if (!(total_time > 0.0) || a <= 0 || d <= 0 || gates_per_step <= 0) {
        throw InvalidInput("cost_estimate: arguments must be positive");
    }
    const double x = total_time * total_time * a * d / eps;
    // Absorb rounding such as 4 / 0.1 = 40.000000000000007.
    const auto steps = static_cast<std::uint64_t>(std::max(1.0, std::ceil(x * (1.0 - 1e-12))));
    return {steps, steps * static_cast<std::uint64_t>(gates_per_step)};
}

void write_trotter_csv(std::ostream &out, const std::vector<TrotterReport> &reports) {
    csv::write_row(out, {"n", "lambda", "code", "error", "bound_loose", "bound_tight"});
    for (const auto &r : reports) {
        csv::write_row(out, {std::to_string(r.n), csv::format(r.lambda), std::string(to_string(r.code)),
                             csv::format(r.error_exact), csv::format(r.bound_loose), csv::format(r.bound_tight)});
    }
}

} // namespace graylap

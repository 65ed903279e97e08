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

#include "graylap/ho.hpp"

#include <cmath>
#include <ostream>

#include "graylap/csv.hpp"
#include "graylap/numerics.hpp"

namespace graylap {

namespace {

void check_cutoff(int cutoff) {
    if (cutoff < 2) {
        throw InvalidInput("HO cutoff must be at least 2, got " + std::to_string(cutoff));
    }
    if (cutoff > 20000) {
        throw CapacityError("HO cutoff too large for a dense eigensolve");
    }
}

} // namespace

Eigen::MatrixXd ho_comm_matrix(int cutoff) {
    check_cutoff(cutoff);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(cutoff, cutoff);
    for (int i = 2; i < cutoff; ++i) {
        const double v = std::sqrt(static_cast<double>(i) * (i - 1));
        m(i, i - 2) = v;
        m(i - 2, i) = v;
    }
    return m;
}

double ho_comm_max_eig(int cutoff) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ho_comm_matrix(cutoff), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd ho_comm_oracle(int cutoff) {
    check_cutoff(cutoff);
    const int big = cutoff + 2;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(big, big);
    for (int i = 1; i < big; ++i) {
        a(i - 1, i) = std::sqrt(static_cast<double>(i));
    }
    const Eigen::MatrixXcd ad = a.adjoint();
    const double r = 1.0 / std::sqrt(2.0);
    const Eigen::MatrixXcd x = r * (a + ad);
    const Eigen::MatrixXcd p = Complex{0.0, r} * (ad - a);
    const Eigen::MatrixXcd x2 = x * x;
    const Eigen::MatrixXcd p2 = p * p;
    const Eigen::MatrixXcd c = p2 * x2 - x2 * p2;
    // The top two ladder states feel the truncation; drop them.
    return c.topLeftCorner(cutoff, cutoff).real();
}

double ho_comm_oracle_norm(int cutoff) {
    const Eigen::MatrixXd c = ho_comm_oracle(cutoff);
    // Real antisymmetric: i C is Hermitian with the same singular values.
    const Eigen::MatrixXcd h = Complex{0.0, 1.0} * c.cast<Complex>();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

CutoffMatch cutoff_match(double mass, double omega, double a) {
    if (!(mass > 0.0) || !(omega > 0.0) || !(a > 0.0)) {
        throw InvalidInput("cutoff_match: arguments must be positive");
    }
    const double ma2 = mass * a * a;
    return {1.0 / (omega * ma2), omega / (4.0 * ma2), 2.0 / ma2};
}

std::vector<HoScanRow> ho_scan(const std::vector<int> &cutoffs) {
    if (cutoffs.empty()) {
        throw InvalidInput("ho_scan: empty cutoff list");
    }
    for (int c : cutoffs) {
        check_cutoff(c);
    }
    std::vector<HoScanRow> rows(cutoffs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cutoffs.size()); ++i) {
        const int c = cutoffs[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] = {c, ho_comm_max_eig(c), ho_comm_oracle_norm(c)};
    }
    return rows;
}

void write_ho_csv(std::ostream &out, const std::vector<HoScanRow> &rows) {
    csv::write_row(out, {"Lambda", "max_eig", "oracle_norm"});
    for (const auto &r : rows) {
        csv::write_row(out, {std::to_string(r.cutoff), csv::format(r.max_eig), csv::format(r.oracle_norm)});
    }
}

} // namespace graylap

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
 * [P^2, X^2] in a truncated harmonic-oscillator basis, in oscillator units
 * (X and P measured in b and 1/b).
 *
 * Two objects are kept apart. `ho_comm_matrix` is the real symmetric
 * matrix with entries sqrt(i(i-1)) on |i - j| = 2, whose spectrum is the
 * quoted growth with the cutoff. `ho_comm_oracle` is the commutator itself,
 * 2 (a^dag^2 - a^2), real antisymmetric and exactly twice as large entrywise.
 */
#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace graylap {

/// Lambda x Lambda, states 0 .. Lambda-1; entries (i, i-2) = (i-2, i) = sqrt(i(i-1)).
[[nodiscard]] Eigen::MatrixXd ho_comm_matrix(int cutoff);

/// Largest |eigenvalue| of ho_comm_matrix.
[[nodiscard]] double ho_comm_max_eig(int cutoff);

/**
 * [P^2, X^2] on states 0 .. Lambda-1, computed from ladder operators on
 * Lambda + 2 states and then truncated, so every kept entry equals the
 * untruncated operator's.
 */
[[nodiscard]] Eigen::MatrixXd ho_comm_oracle(int cutoff);

/// Spectral norm of ho_comm_oracle.
[[nodiscard]] double ho_comm_oracle_norm(int cutoff);

struct CutoffMatch {
    /// 1 / (M omega a^2)
    double lambda_est;
    /// omega / (4 M a^2)
    double comm_norm_est;
    /// 2 / (M a^2)
    double crossover_omega;
};

/// Arguments in natural units (MeV, MeV, MeV^-1).
[[nodiscard]] CutoffMatch cutoff_match(double mass, double omega, double a);

struct HoScanRow {
    int cutoff;
    double max_eig;
    double oracle_norm;
};

[[nodiscard]] std::vector<HoScanRow> ho_scan(const std::vector<int> &cutoffs);

/// Columns Lambda, max_eig, oracle_norm.
void write_ho_csv(std::ostream &out, const std::vector<HoScanRow> &rows);

} // namespace graylap

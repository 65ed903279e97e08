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

#include "graylap/qubit_ops.hpp"

#include <cmath>

namespace graylap {

DenseOperator product_operator(int n, const std::vector<Factor> &factors) {
    if (n < 0 || n > kMaxDenseQubits) {
        throw CapacityError("product_operator: register of " + std::to_string(n) + " qubits");
    }
    std::uint64_t listed = 0;
    for (const auto &f : factors) {
        if (f.qubit < 0 || f.qubit >= n) {
            throw InvalidInput("product_operator: qubit index out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << f.qubit;
        if (listed & bit) {
            throw InvalidInput("product_operator: repeated qubit");
        }
        listed |= bit;
    }

    const std::size_t dim = std::size_t{1} << n;
    const std::size_t k = factors.size();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        // Rows reachable from column c differ only on listed qubits.
        for (std::size_t pattern = 0; pattern < (std::size_t{1} << k); ++pattern) {
            std::size_t r = c & ~listed;
            Complex value{1.0, 0.0};
            for (std::size_t f = 0; f < k; ++f) {
                const std::size_t rb = (pattern >> f) & 1U;
                const std::size_t cb = (c >> factors[f].qubit) & 1U;
                value *= factors[f].m[2 * rb + cb];
                r |= rb << factors[f].qubit;
            }
            if (value != Complex{0.0, 0.0}) {
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
            }
        }
    }
    return DenseOperator(std::move(out));
}

DenseOperator product_operator(int n, std::initializer_list<Factor> factors) {
    return product_operator(n, std::vector<Factor>(factors));
}

// --- PauliString ---------------------------------------------------------

PauliString::PauliString(double coefficient, std::vector<Pauli> factors)
    : coeff_(coefficient), factors_(std::move(factors)) {
    if (factors_.empty() || factors_.size() > 62) {
        throw InvalidInput("PauliString: unsupported length");
    }
    if (!std::isfinite(coeff_)) {
        throw InvalidInput("PauliString: non-finite coefficient");
    }
}

int PauliString::weight() const {
    int w = 0;
    for (auto p : factors_) {
        w += p != Pauli::I ? 1 : 0;
    }
    return w;
}

std::uint64_t PauliString::flip_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        if (factors_[q] == Pauli::X || factors_[q] == Pauli::Y) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::uint64_t PauliString::phase_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        if (factors_[q] == Pauli::Y || factors_[q] == Pauli::Z) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::string PauliString::label() const {
    std::string s;
    s.reserve(factors_.size());
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        constexpr char names[] = {'I', 'X', 'Y', 'Z'};
        s.push_back(names[static_cast<int>(*it)]);
    }
    return s;
}

DenseOperator PauliString::to_operator() const {
    std::vector<Factor> fs;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        switch (factors_[q]) {
        case Pauli::I:
            break;
        case Pauli::X:
            fs.push_back({static_cast<int>(q), mat2::kX});
            break;
        case Pauli::Y:
            fs.push_back({static_cast<int>(q), mat2::kY});
            break;
        case Pauli::Z:
            fs.push_back({static_cast<int>(q), mat2::kZ});
            break;
        }
    }
    return Complex{coeff_, 0.0} * product_operator(n_qubits(), fs);
}

std::pair<Complex, std::uint64_t> PauliString::act_on_basis(std::uint64_t basis) const {
    Complex phase{1.0, 0.0};
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        const bool one = (basis >> q) & 1U;
        if (factors_[q] == Pauli::Y) {
            phase *= one ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        } else if (factors_[q] == Pauli::Z && one) {
            phase = -phase;
        }
    }
    return {phase, basis ^ flip_mask()};
}

void apply_pauli_exponential(Matrix &m, const PauliString &p, double theta) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    if (dim != (std::uint64_t{1} << p.n_qubits())) {
        throw InvalidInput("apply_pauli_exponential: dimension mismatch");
    }
    // exp(i theta P) = cos(theta) + i sin(theta) P; row b of P*m is
    // phase(b') * row b' of m where P|b'> = phase |b>.
    const double c = std::cos(theta);
    const Complex is{0.0, std::sin(theta)};
    const Matrix src = m;
    for (std::uint64_t b = 0; b < dim; ++b) {
        const auto [phase, image] = p.act_on_basis(b);
        m.row(static_cast<Eigen::Index>(image)) =
            c * src.row(static_cast<Eigen::Index>(image)) + is * phase * src.row(static_cast<Eigen::Index>(b));
    }
}

} // namespace graylap

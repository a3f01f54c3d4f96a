// Copyright 2025 The KrylovGrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "krylovgrad/exact.hpp"

#include <bit>
#include <stdexcept>

namespace krylovgrad {

Eigen::MatrixXcd dense_matrix(const PauliSum &op) {
    const int n = op.n_qubits();
    if (n < 1 || n > 16)
        throw std::invalid_argument("dense_matrix: 1..16 qubits supported");
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[coeff, term] : op.terms()) {
        for (std::size_t col = 0; col < dim; ++col) {
            auto [row, factor] = term.apply_to_basis(col);
            mat(row, col) += coeff * factor;
        }
    }
    return mat;
}

std::vector<std::uint64_t> sector_basis(int n_modes, int n_electrons,
                                        std::optional<int> two_sz) {
    if (n_modes < 1 || n_modes > 30)
        throw std::invalid_argument("sector_basis: 1..30 modes supported");
    std::vector<std::uint64_t> basis;
    const std::uint64_t dim = std::uint64_t{1} << n_modes;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        if (std::popcount(idx) != n_electrons)
            continue;
        if (two_sz) {
            int sz = 0;
            for (int m = 0; m < n_modes; ++m)
                if ((idx >> m) & 1)
                    sz += (m % 2 == 0) ? 1 : -1;
            if (sz != *two_sz)
                continue;
        }
        basis.push_back(idx);
    }
    return basis;
}

Eigen::VectorXd sector_spectrum(const PauliSum &op,
                                const std::vector<std::uint64_t> &basis) {
    if (basis.empty())
        throw std::invalid_argument("sector_spectrum: empty sector");
    const std::size_t d = basis.size();
    std::vector<std::int64_t> where(std::size_t{1} << op.n_qubits(), -1);
    for (std::size_t i = 0; i < d; ++i)
        where[basis[i]] = static_cast<std::int64_t>(i);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &[coeff, term] : op.terms()) {
        for (std::size_t col = 0; col < d; ++col) {
            auto [row_idx, factor] = term.apply_to_basis(basis[col]);
            std::int64_t row = where[row_idx];
            if (row >= 0)
                h(row, col) += coeff * factor;
            // Components leaving the sector are dropped; for sector-preserving
            // operators none arise.
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    return solver.eigenvalues();
}

double sector_ground_energy(const PauliSum &op,
                            const std::vector<std::uint64_t> &basis) {
    return sector_spectrum(op, basis)(0);
}

} // namespace krylovgrad

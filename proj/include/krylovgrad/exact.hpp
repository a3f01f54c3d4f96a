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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "krylovgrad/pauli.hpp"

namespace krylovgrad {

/// Dense matrix of a Pauli sum (column-by-column basis application).
Eigen::MatrixXcd dense_matrix(const PauliSum &op);

/// Basis indices with the given electron count and, optionally, the given
/// 2*Sz (alpha modes are even bits, beta modes odd bits).
std::vector<std::uint64_t> sector_basis(int n_modes, int n_electrons,
                                        std::optional<int> two_sz);

/// Ground eigenvalue of the operator restricted to the span of the given
/// basis indices.
double sector_ground_energy(const PauliSum &op,
                            const std::vector<std::uint64_t> &basis);

/// Ascending eigenvalues of the sector-restricted operator.
Eigen::VectorXd sector_spectrum(const PauliSum &op,
                                const std::vector<std::uint64_t> &basis);

} // namespace krylovgrad

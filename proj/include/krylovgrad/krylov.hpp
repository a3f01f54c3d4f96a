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

#include <Eigen/Dense>

#include "krylovgrad/block_encoding.hpp"

namespace krylovgrad {

enum class KrylovBasis { monomial, chebyshev };

/// Krylov Hamiltonian/overlap matrices for the rescaled H = H_lcu / lambda.
/// In the monomial basis both matrices are Hankel and are assembled from the
/// shared moment sequence m_n = <psi0|H^n|psi0>, so the shift identities
/// H(i,j) == H(i+1,j-1) and S(i,j) == H(i,j-1) hold exactly. In the
/// Chebyshev basis the entries are <psi0|T_i(H) H T_j(H)|psi0> and
/// <psi0|T_i T_j|psi0>, and `moments` holds <psi0|T_n(H)|psi0>.
struct KrylovMatrices {
    int dim = 0;
    KrylovBasis basis = KrylovBasis::chebyshev;
    Eigen::MatrixXd h_tilde;
    Eigen::MatrixXd s_tilde;
    Eigen::VectorXd moments; // length 2*dim, index n
};

/// Thrown when the regularized eigenproblem has nothing left to solve.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxKrylovDim = 32;

KrylovMatrices build_matrices(const BlockEncoding &be,
                              const StateVector &psi0, int dim,
                              KrylovBasis basis = KrylovBasis::chebyshev);

/// Solution of H c = E S c via canonical orthonormalization: S = U L U^T,
/// eigenvalues clamped at zero, columns with L_ii < threshold (or exactly
/// zero) discarded, the projected standard problem solved, and coefficients
/// mapped back. Energies ascend; each coefficient column is sign-fixed so
/// its first nonvanishing entry is positive.
struct KrylovSolution {
    Eigen::VectorXd energies;       // rescaled units, ascending, length rank
    Eigen::MatrixXd coefficients;   // dim x rank, S-orthonormal columns
    int retained_rank = 0;
    double threshold = 0.0;
    Eigen::VectorXd overlap_eigenvalues; // all dim values, ascending
    Eigen::MatrixXd overlap_eigenvectors;
};

KrylovSolution solve(const KrylovMatrices &mat, double threshold);

/// d E_m / d theta of the rescaled Krylov energy for H(theta) with
/// V = dH/dtheta supplied as a hermitian Pauli sum in the same rescaled
/// units. Evaluates the generalized-eigenpair derivative with
/// d H~_ij = sum_{k=1}^{i+j+1} <psi0| H^{k-1} V H^{i+j+1-k} |psi0> and
/// d S~_ij = d H~_{i,j-1}, using monomial-basis matrices at (dim, threshold).
double direct_energy_derivative(const BlockEncoding &be,
                                const StateVector &psi0, int dim,
                                double threshold, const PauliSum &v_rescaled,
                                int state_index);

/// d/d theta of the physical Krylov energy E_m = lambda(theta) E~_m(theta)
/// + shift(theta) for a physical perturbation v_phys = dH_phys/dtheta
/// (identity component allowed). Accounts for d lambda/d theta through the
/// signs of the Hamiltonian coefficients; strings of v_phys absent from the
/// Hamiltonian contribute zero to d lambda (the symmetric choice at a
/// |coefficient| kink).
double physical_energy_derivative(const LcuOperator &hamiltonian,
                                  const StateVector &psi0, int dim,
                                  double threshold, const PauliSum &v_phys,
                                  int state_index);

enum class MeasurementMode { energy, direct_gradient };

/// Number of distinct quantum expectation values needed at Krylov dimension
/// `dim`: 2D-1 moments for energies; for the direct gradient, the number of
/// distinct (a, b) in <psi0|H^a V H^b|psi0> generated by the product rule.
long count_distinct_measurements(int dim, MeasurementMode mode);

} // namespace krylovgrad

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

#include <vector>

#include <Eigen/Dense>

#include "krylovgrad/fermion.hpp"
#include "krylovgrad/pauli.hpp"

namespace krylovgrad {

/// Rank-4 tensor of two-electron integrals in chemists' notation (pq|rs),
/// stored dense over spin orbitals.
class TwoBodyTensor {
  public:
    TwoBodyTensor() = default;
    explicit TwoBodyTensor(int n) : n_(n), data_(std::size_t(n) * n * n * n) {}

    int dim() const { return n_; }
    double &operator()(int p, int q, int r, int s) {
        return data_[index(p, q, r, s)];
    }
    double operator()(int p, int q, int r, int s) const {
        return data_[index(p, q, r, s)];
    }
    const std::vector<double> &data() const { return data_; }
    std::vector<double> &data() { return data_; }

  private:
    std::size_t index(int p, int q, int r, int s) const {
        return ((std::size_t(p) * n_ + q) * n_ + r) * n_ + s;
    }
    int n_ = 0;
    std::vector<double> data_;
};

/// Molecular Hamiltonian data at spin-orbital resolution:
///   H = e_nuc + sum_pq k[p][q] E_pq + 1/2 sum_pqrs g(pqrs) E_pq E_rs
/// with E_pq = a_p^+ a_q, k symmetric, and g carrying the 8-fold real
/// integral symmetry in chemists' notation. Spin orbitals are interleaved
/// (0a, 0b, 1a, 1b, ...).
struct MolecularHamiltonian {
    int n_spin_orbitals = 0;
    int n_electrons = 0;
    double e_nuc = 0.0;
    Eigen::MatrixXd k;
    TwoBodyTensor g;

    /// Throws std::invalid_argument if k is not symmetric or g violates the
    /// 8-fold symmetry (tolerance 1e-12).
    void validate() const;

    /// The fermionic operator of the k/g part (without e_nuc).
    FermionOperator body_operator() const;
};

/// Builds a spin-orbital Hamiltonian from spatial-orbital data; spatial
/// orbital i expands to spin orbitals 2i (alpha) and 2i+1 (beta).
MolecularHamiltonian
expand_to_spin_orbitals(int n_spatial, int n_electrons, double e_nuc,
                        const Eigen::MatrixXd &k_spatial,
                        const TwoBodyTensor &g_spatial);

/// A Hamiltonian as a positively weighted sum of phased Pauli strings:
/// H = sum_k alpha_k P_k with alpha_k > 0 and signs absorbed into the terms'
/// phases (+1 or -1 for hermitian input). lambda() is the 1-norm of the
/// coefficients.
class LcuOperator {
  public:
    struct Term {
        double alpha;   // > 0
        PauliTerm pauli; // displayed phase +1 or -1
    };

    LcuOperator() = default;

    /// Canonicalizes a hermitian Pauli sum: merges duplicates, folds signs
    /// into term phases, drops |coefficient| < 1e-12. Throws if the sum has
    /// an imaginary coefficient above 1e-10 * max|coefficient|.
    static LcuOperator from_pauli_sum(const PauliSum &sum);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    double lambda() const { return lambda_; }

    /// The operator as a plain Pauli sum (signed real coefficients).
    PauliSum to_pauli_sum() const;

    /// Signed coefficient of a letter string, 0 when absent.
    double signed_coefficient(const PauliTerm &letters) const;

    /// Splits off the identity component: returns its signed coefficient and
    /// the LCU of the remaining terms. The identity is added back classically
    /// downstream, which keeps lambda and the ancilla count smaller.
    std::pair<double, LcuOperator> split_identity() const;

  private:
    int n_qubits_ = 0;
    double lambda_ = 0.0;
    std::vector<Term> terms_;
};

/// Jordan-Wigner image of the molecular Hamiltonian as an LCU (identity term
/// included; e_nuc lands on the identity string).
LcuOperator assemble_hamiltonian(const MolecularHamiltonian &mol);

} // namespace krylovgrad

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

#include "krylovgrad/molecular.hpp"

#include <cmath>
#include <stdexcept>

namespace krylovgrad {

void MolecularHamiltonian::validate() const {
    const int n = n_spin_orbitals;
    if (n < 1)
        throw std::invalid_argument("MolecularHamiltonian: no spin orbitals");
    if (k.rows() != n || k.cols() != n || g.dim() != n)
        throw std::invalid_argument("MolecularHamiltonian: shape mismatch");
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < p; ++q)
            if (std::abs(k(p, q) - k(q, p)) > 1e-12)
                throw std::invalid_argument(
                    "MolecularHamiltonian: k is not symmetric");
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s <= r; ++s) {
                    double v = g(p, q, r, s);
                    if (std::abs(v - g(q, p, r, s)) > 1e-12 ||
                        std::abs(v - g(p, q, s, r)) > 1e-12 ||
                        std::abs(v - g(r, s, p, q)) > 1e-12)
                        throw std::invalid_argument(
                            "MolecularHamiltonian: g violates 8-fold "
                            "symmetry");
                }
}

FermionOperator MolecularHamiltonian::body_operator() const {
    const int n = n_spin_orbitals;
    FermionOperator op;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (k(p, q) != 0.0)
                op.add_term(k(p, q), {{p, true}, {q, false}});
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    double v = g(p, q, r, s);
                    if (v != 0.0)
                        op.add_term(0.5 * v, {{p, true},
                                              {q, false},
                                              {r, true},
                                              {s, false}});
                }
    return op;
}

MolecularHamiltonian
expand_to_spin_orbitals(int n_spatial, int n_electrons, double e_nuc,
                        const Eigen::MatrixXd &k_spatial,
                        const TwoBodyTensor &g_spatial) {
    if (k_spatial.rows() != n_spatial || g_spatial.dim() != n_spatial)
        throw std::invalid_argument("expand_to_spin_orbitals: shape mismatch");
    MolecularHamiltonian mol;
    mol.n_spin_orbitals = 2 * n_spatial;
    mol.n_electrons = n_electrons;
    mol.e_nuc = e_nuc;
    mol.k = Eigen::MatrixXd::Zero(mol.n_spin_orbitals, mol.n_spin_orbitals);
    mol.g = TwoBodyTensor(mol.n_spin_orbitals);
    for (int i = 0; i < n_spatial; ++i)
        for (int j = 0; j < n_spatial; ++j)
            for (int sigma = 0; sigma < 2; ++sigma)
                mol.k(2 * i + sigma, 2 * j + sigma) = k_spatial(i, j);
    for (int i = 0; i < n_spatial; ++i)
        for (int j = 0; j < n_spatial; ++j)
            for (int kk = 0; kk < n_spatial; ++kk)
                for (int l = 0; l < n_spatial; ++l) {
                    double v = g_spatial(i, j, kk, l);
                    if (v == 0.0)
                        continue;
                    for (int sigma = 0; sigma < 2; ++sigma)
                        for (int tau = 0; tau < 2; ++tau)
                            mol.g(2 * i + sigma, 2 * j + sigma, 2 * kk + tau,
                                  2 * l + tau) = v;
                }
    return mol;
}

LcuOperator LcuOperator::from_pauli_sum(const PauliSum &sum) {
    LcuOperator lcu;
    lcu.n_qubits_ = sum.n_qubits();
    double scale = sum.max_abs_coefficient();
    for (const auto &[coeff, term] : sum.terms()) {
        if (std::abs(coeff.imag()) > 1e-10 * std::max(scale, 1.0))
            throw std::invalid_argument(
                "LcuOperator: non-hermitian Pauli sum");
        double c = coeff.real();
        if (std::abs(c) < 1e-12)
            continue;
        PauliTerm pauli = term.letters_only();
        if (c < 0.0) {
            pauli = PauliTerm::from_masks(term.n_qubits(), term.x_mask(),
                                          term.z_mask(),
                                          term.quarter_turns() + 2);
            c = -c;
        }
        lcu.terms_.push_back({c, pauli});
        lcu.lambda_ += c;
    }
    return lcu;
}

PauliSum LcuOperator::to_pauli_sum() const {
    PauliSum sum(n_qubits_);
    for (const auto &term : terms_)
        sum.add(term.alpha, term.pauli);
    return sum;
}

double LcuOperator::signed_coefficient(const PauliTerm &letters) const {
    for (const auto &term : terms_) {
        if (term.pauli.x_mask() == letters.x_mask() &&
            term.pauli.z_mask() == letters.z_mask())
            return term.alpha * term.pauli.phase().real();
    }
    return 0.0;
}

std::pair<double, LcuOperator> LcuOperator::split_identity() const {
    double shift = 0.0;
    LcuOperator rest;
    rest.n_qubits_ = n_qubits_;
    for (const auto &term : terms_) {
        if (term.pauli.is_identity_letters()) {
            shift += term.alpha * term.pauli.phase().real();
        } else {
            rest.terms_.push_back(term);
            rest.lambda_ += term.alpha;
        }
    }
    return {shift, rest};
}

LcuOperator assemble_hamiltonian(const MolecularHamiltonian &mol) {
    mol.validate();
    PauliSum sum = jordan_wigner(mol.body_operator(), mol.n_spin_orbitals);
    sum += PauliSum::identity(mol.n_spin_orbitals, mol.e_nuc);
    return LcuOperator::from_pauli_sum(sum);
}

} // namespace krylovgrad

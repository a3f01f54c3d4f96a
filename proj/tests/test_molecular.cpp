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

#include <doctest.h>

#include <bit>
#include <random>

#include "krylovgrad/molecular.hpp"
#include "oracles.hpp"

using namespace krylovgrad;

namespace {

MolecularHamiltonian empty_mol(int n_spin_orbitals, double e_nuc) {
    MolecularHamiltonian mol;
    mol.n_spin_orbitals = n_spin_orbitals;
    mol.n_electrons = 0;
    mol.e_nuc = e_nuc;
    mol.k = Eigen::MatrixXd::Zero(n_spin_orbitals, n_spin_orbitals);
    mol.g = TwoBodyTensor(n_spin_orbitals);
    return mol;
}

} // namespace

TEST_CASE("zero integrals give a single identity term") {
    auto mol = empty_mol(2, 7.0);
    LcuOperator lcu = assemble_hamiltonian(mol);
    REQUIRE(lcu.size() == 1);
    CHECK(lcu.terms()[0].pauli.is_identity_letters());
    CHECK(lcu.lambda() == doctest::Approx(7.0));
}

TEST_CASE("diagonal k reproduces occupation-number sums") {
    auto mol = empty_mol(3, 0.0);
    mol.k(0, 0) = -1.1;
    mol.k(1, 1) = 0.4;
    mol.k(2, 2) = -0.3;
    LcuOperator lcu = assemble_hamiltonian(mol);
    Eigen::MatrixXcd dense = oracles::dense_pauli_sum(lcu.to_pauli_sum());
    // Operator is diagonal in the occupation basis.
    for (std::uint64_t n = 0; n < 8; ++n) {
        double expect = 0.0;
        for (int p = 0; p < 3; ++p)
            if ((n >> p) & 1)
                expect += mol.k(p, p);
        CHECK(std::abs(dense(n, n).real() - expect) < 1e-12);
    }
    CHECK((dense - Eigen::MatrixXcd(dense.diagonal().asDiagonal()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("one nonzero g term matches the fermionic oracle") {
    auto mol = empty_mol(2, 0.0);
    mol.k(0, 0) = -1.252;
    // (00|00) in chemists' notation over spin orbitals
    mol.g(0, 0, 1, 1) = 0.675;
    mol.g(1, 1, 0, 0) = 0.675;
    LcuOperator lcu = assemble_hamiltonian(mol);

    FermionOperator ferm = mol.body_operator();
    Eigen::MatrixXcd expected = oracles::dense_fermion(ferm, 2);
    Eigen::MatrixXcd got = oracles::dense_pauli_sum(lcu.to_pauli_sum());
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("assembled Hamiltonians are hermitian with consistent lambda") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    Eigen::MatrixXd k_sp(2, 2);
    k_sp << u(rng), 0.2, 0.2, u(rng);
    TwoBodyTensor g_sp(2);
    auto set8 = [&](int p, int q, int r, int s, double v) {
        g_sp(p, q, r, s) = v;
        g_sp(q, p, r, s) = v;
        g_sp(p, q, s, r) = v;
        g_sp(q, p, s, r) = v;
        g_sp(r, s, p, q) = v;
        g_sp(s, r, p, q) = v;
        g_sp(r, s, q, p) = v;
        g_sp(s, r, q, p) = v;
    };
    set8(0, 0, 0, 0, 0.62);
    set8(1, 1, 1, 1, 0.59);
    set8(0, 0, 1, 1, 0.48);
    set8(0, 1, 0, 1, 0.17);
    set8(0, 0, 0, 1, 0.08);

    MolecularHamiltonian mol =
        expand_to_spin_orbitals(2, 2, 0.31, k_sp, g_sp);
    mol.validate();
    LcuOperator lcu = assemble_hamiltonian(mol);

    Eigen::MatrixXcd dense = oracles::dense_pauli_sum(lcu.to_pauli_sum());
    CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

    double sum_alpha = 0.0;
    for (const auto &term : lcu.terms()) {
        CHECK(term.alpha > 0.0);
        Complex phase = term.pauli.phase();
        bool real_sign = phase == Complex{1.0, 0.0} ||
                         phase == Complex{-1.0, 0.0};
        CHECK(real_sign);
        sum_alpha += term.alpha;
    }
    CHECK(lcu.lambda() == doctest::Approx(sum_alpha).epsilon(1e-14));

    // Rescaled spectrum lies in [-1, 1].
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense /
                                                       lcu.lambda());
    CHECK(es.eigenvalues().minCoeff() >= -1.0 - 1e-12);
    CHECK(es.eigenvalues().maxCoeff() <= 1.0 + 1e-12);

    // Full dense image agrees with the occupation-basis construction.
    Eigen::MatrixXcd ferm = oracles::dense_fermion(mol.body_operator(), 4);
    ferm += mol.e_nuc * Eigen::MatrixXcd::Identity(16, 16);
    CHECK((dense - ferm).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("negative coefficients fold into term phases") {
    PauliSum sum(1);
    sum.add({-0.7, 0.0}, PauliTerm::from_letters("Z"));
    LcuOperator lcu = LcuOperator::from_pauli_sum(sum);
    REQUIRE(lcu.size() == 1);
    CHECK(lcu.terms()[0].alpha == doctest::Approx(0.7));
    CHECK(lcu.terms()[0].pauli.phase() == Complex{-1.0, 0.0});
    CHECK(lcu.signed_coefficient(PauliTerm::from_letters("Z")) ==
          doctest::Approx(-0.7));
}

TEST_CASE("split_identity removes the shift exactly") {
    auto mol = empty_mol(2, 3.25);
    mol.k(0, 0) = -1.0;
    LcuOperator lcu = assemble_hamiltonian(mol);
    auto [shift, rest] = lcu.split_identity();
    // identity content: e_nuc + 1/2 sum_p k_pp from (I - Z)/2
    CHECK(shift == doctest::Approx(3.25 - 0.5));
    for (const auto &term : rest.terms())
        CHECK_FALSE(term.pauli.is_identity_letters());
    CHECK(rest.lambda() == doctest::Approx(0.5));
}

TEST_CASE("asymmetric k is rejected") {
    auto mol = empty_mol(2, 0.0);
    mol.k(0, 1) = 0.5;
    CHECK_THROWS_AS(assemble_hamiltonian(mol), std::invalid_argument);
}

TEST_CASE("non-hermitian Pauli sums cannot become LCUs") {
    PauliSum sum(1);
    sum.add({0.0, 0.5}, PauliTerm::from_letters("X"));
    CHECK_THROWS_AS(LcuOperator::from_pauli_sum(sum), std::invalid_argument);
}

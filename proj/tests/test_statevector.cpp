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

#include <cstdio>
#include <random>

#include "krylovgrad/statevector.hpp"
#include "oracles.hpp"

using namespace krylovgrad;

TEST_CASE("Z0 leaves |0> unchanged") {
    auto state = StateVector::computational_basis(1, 0, 0);
    PauliSum z(1);
    z.add({1.0, 0.0}, PauliTerm::from_letters("Z"));
    auto out = apply_pauli_sum(state, z);
    CHECK(out[0] == Complex{1.0, 0.0});
    CHECK(out[1] == Complex{0.0, 0.0});
}

TEST_CASE("doubled X0 maps |0> to 2|1>") {
    auto state = StateVector::computational_basis(1, 0, 0);
    PauliSum op(1);
    op.add({1.0, 0.0}, PauliTerm::from_letters("X"));
    op.add({1.0, 0.0}, PauliTerm::from_letters("X"));
    auto out = apply_pauli_sum(state, op);
    CHECK(out[0] == Complex{0.0, 0.0});
    CHECK(out[1] == Complex{2.0, 0.0});
}

TEST_CASE("random 5-qubit sums match dense matrix-vector products") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        PauliSum op(5);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int t = 0; t < 6; ++t)
            op.add({u(rng), u(rng)}, oracles::random_pauli(rng, 5));
        auto state = oracles::random_state(rng, 5);
        Eigen::VectorXcd expected =
            oracles::dense_pauli_sum(op) * oracles::to_eigen(state);
        auto out = apply_pauli_sum(state, op);
        CHECK((expected - oracles::to_eigen(out)).cwiseAbs().maxCoeff() <
              1e-13);
    }
}

TEST_CASE("system-register operators broadcast over ancillas") {
    std::mt19937 rng(67);
    auto state = oracles::random_state(rng, 2, 2);
    PauliSum op(2);
    op.add({0.7, 0.0}, PauliTerm::from_letters("XY"));
    auto out = apply_pauli_sum(state, op);
    // Per ancilla block the action must equal the 2-qubit dense product.
    Eigen::MatrixXcd dense = oracles::dense_pauli_sum(op);
    for (int block = 0; block < 4; ++block) {
        Eigen::VectorXcd in(4), expect(4);
        for (int s = 0; s < 4; ++s)
            in(s) = state[block * 4 + s];
        expect = dense * in;
        for (int s = 0; s < 4; ++s)
            CHECK(std::abs(out[block * 4 + s] - expect(s)) < 1e-13);
    }
}

TEST_CASE("register mismatch is rejected") {
    auto state = StateVector::computational_basis(2, 1, 0);
    PauliSum op(4);
    op.add({1.0, 0.0}, PauliTerm::from_letters("XXXX"));
    CHECK_THROWS_AS(apply_pauli_sum(state, op), std::invalid_argument);
}

TEST_CASE("expectation values: <0|Z|0>, <+|X|+>, dense oracle") {
    auto zero = StateVector::computational_basis(1, 0, 0);
    PauliSum z(1);
    z.add({1.0, 0.0}, PauliTerm::from_letters("Z"));
    CHECK(expectation(zero, z) == doctest::Approx(1.0));

    StateVector plus(1, 0);
    plus[0] = plus[1] = Complex{1.0 / std::sqrt(2.0), 0.0};
    PauliSum x(1);
    x.add({1.0, 0.0}, PauliTerm::from_letters("X"));
    CHECK(expectation(plus, x) == doctest::Approx(1.0));

    std::mt19937 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto state = oracles::random_state(rng, 4);
        auto op = oracles::random_hermitian_sum(rng, 4, 5, true);
        Eigen::VectorXcd v = oracles::to_eigen(state);
        double expected =
            (v.adjoint() * oracles::dense_pauli_sum(op) * v)(0).real();
        CHECK(expectation(state, op) == doctest::Approx(expected));
    }
}

TEST_CASE("expectation rejects bad inputs") {
    auto state = StateVector::computational_basis(1, 0, 0);
    PauliSum nonherm(1);
    nonherm.add({0.0, 1.0}, PauliTerm::from_letters("X"));
    CHECK_THROWS_AS(expectation(state, nonherm), std::invalid_argument);

    StateVector zero_state(1, 0);
    PauliSum x(1);
    x.add({1.0, 0.0}, PauliTerm::from_letters("X"));
    CHECK_THROWS_AS(expectation(zero_state, x), std::invalid_argument);
}

TEST_CASE("pauli_variance is 1 - <P>^2") {
    auto zero = StateVector::computational_basis(1, 0, 0);
    CHECK(pauli_variance(zero, PauliTerm::from_letters("Z")) ==
          doctest::Approx(0.0));
    CHECK(pauli_variance(zero, PauliTerm::from_letters("X")) ==
          doctest::Approx(1.0));

    std::mt19937 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        auto state = oracles::random_state(rng, 3);
        auto p = oracles::random_pauli(rng, 3).letters_only();
        Eigen::VectorXcd v = oracles::to_eigen(state);
        double mean =
            (v.adjoint() * oracles::dense_pauli(p) * v)(0).real();
        CHECK(pauli_variance(state, p) ==
              doctest::Approx(1.0 - mean * mean));
    }
    CHECK_THROWS_AS(pauli_variance(zero,
                                   PauliTerm::from_letters("X", {0.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("unitary Pauli application preserves the norm") {
    std::mt19937 rng(79);
    auto state = oracles::random_state(rng, 4);
    for (int trial = 0; trial < 10; ++trial) {
        apply_pauli_term_inplace(state, oracles::random_pauli(rng, 4));
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("binary dump round trip") {
    std::mt19937 rng(83);
    auto state = oracles::random_state(rng, 3, 1);
    std::string path = std::string("/tmp/krylovgrad_sv_test.bin");
    state.dump_binary(path);
    auto loaded = StateVector::load_binary(path, 3, 1);
    for (std::size_t i = 0; i < state.size(); ++i)
        CHECK(state[i] == loaded[i]);
    std::remove(path.c_str());
}

TEST_CASE("qubit cap guards allocation") {
    CHECK_THROWS_AS(StateVector(max_qubits() + 1, 0), std::runtime_error);
}

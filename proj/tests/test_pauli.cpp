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

#include <random>

#include "krylovgrad/pauli.hpp"
#include "oracles.hpp"

using namespace krylovgrad;

TEST_CASE("X0 * Z0 is -i Y0") {
    auto x = PauliTerm::from_letters("X");
    auto z = PauliTerm::from_letters("Z");
    auto prod = pauli_product(x, z);
    CHECK(prod.letters() == "Y");
    CHECK(prod.phase() == Complex{0.0, -1.0});
}

TEST_CASE("identity times P is P") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = oracles::random_pauli(rng, 4);
        auto id = PauliTerm(4);
        CHECK(id * p == p);
        CHECK(p * id == p);
    }
}

TEST_CASE("random 6-qubit products match the dense oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = oracles::random_pauli(rng, 6);
        auto b = oracles::random_pauli(rng, 6);
        Eigen::MatrixXcd expected =
            oracles::dense_pauli(a) * oracles::dense_pauli(b);
        Eigen::MatrixXcd got = oracles::dense_pauli(a * b);
        CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("products are associative and closed") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = oracles::random_pauli(rng, 5);
        auto b = oracles::random_pauli(rng, 5);
        auto c = oracles::random_pauli(rng, 5);
        CHECK((a * b) * c == a * (b * c));
        Complex phase = (a * b).phase();
        bool closed = phase == Complex{1, 0} || phase == Complex{-1, 0} ||
                      phase == Complex{0, 1} || phase == Complex{0, -1};
        CHECK(closed);
    }
}

TEST_CASE("a Pauli squares to phase^2 times identity") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = oracles::random_pauli(rng, 4);
        auto sq = p * p;
        CHECK(sq.is_identity_letters());
        Complex expect = p.phase() * p.phase();
        CHECK(std::abs(sq.phase() - expect) < 1e-14);
        if (p.is_hermitian())
            CHECK(sq.phase() == Complex{1.0, 0.0});
    }
}

TEST_CASE("mask bits beyond the qubit count are rejected") {
    CHECK_THROWS_AS(PauliTerm::from_masks(2, 0b100, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(PauliTerm::from_masks(2, 0, 0b1000),
                    std::invalid_argument);
    CHECK_NOTHROW(PauliTerm::from_masks(3, 0b100, 0b101));
}

TEST_CASE("mismatched qubit counts are rejected") {
    auto a = PauliTerm::from_letters("XX");
    auto b = PauliTerm::from_letters("X");
    CHECK_THROWS_AS(pauli_product(a, b), std::invalid_argument);
}

TEST_CASE("letter round trip keeps phase and letters") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = oracles::random_pauli(rng, 6);
        auto q = PauliTerm::from_letters(p.letters(), p.phase());
        CHECK(p == q);
    }
}

TEST_CASE("PauliSum merges duplicates and drops small terms") {
    PauliSum sum(2);
    auto xx = PauliTerm::from_letters("XX");
    sum.add({0.5, 0.0}, xx);
    sum.add({0.25, 0.0}, xx);
    CHECK(sum.size() == 1);
    CHECK(sum.terms()[0].first == Complex{0.75, 0.0});
    sum.add({-0.75, 0.0}, xx);
    CHECK(sum.empty());

    // phase folding: add -i * (i Y) = Y
    PauliSum folded(1);
    folded.add({0.0, -1.0}, PauliTerm::from_letters("Y", {0.0, 1.0}));
    CHECK(folded.terms()[0].first == Complex{1.0, 0.0});
    CHECK(folded.terms()[0].second.letters() == "Y");
}

TEST_CASE("PauliSum product matches dense oracle") {
    std::mt19937 rng(29);
    auto a = oracles::random_hermitian_sum(rng, 3, 4, true);
    auto b = oracles::random_hermitian_sum(rng, 3, 5, true);
    Eigen::MatrixXcd expected =
        oracles::dense_pauli_sum(a) * oracles::dense_pauli_sum(b);
    Eigen::MatrixXcd got = oracles::dense_pauli_sum(a * b);
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("conjugated sum matches dense conjugate") {
    std::mt19937 rng(31);
    PauliSum sum(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 6; ++t)
        sum.add({u(rng), u(rng)}, oracles::random_pauli(rng, 3));
    Eigen::MatrixXcd expected = oracles::dense_pauli_sum(sum).conjugate();
    Eigen::MatrixXcd got = oracles::dense_pauli_sum(sum.conjugated());
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-14);
}

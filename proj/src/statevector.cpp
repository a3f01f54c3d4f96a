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

#include "krylovgrad/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace krylovgrad {

namespace {

int g_max_qubits = [] {
    if (const char *env = std::getenv("KRYLOVGRAD_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    return 14;
}();

} // namespace

int max_qubits() { return g_max_qubits; }

void set_max_qubits(int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("set_max_qubits: expected 1..30");
    g_max_qubits = n;
}

StateVector::StateVector(int n_system, int n_ancilla)
    : n_system_(n_system), n_ancilla_(n_ancilla) {
    if (n_system < 1 || n_ancilla < 0)
        throw std::invalid_argument("StateVector: bad register sizes");
    if (n_total() > max_qubits())
        throw std::runtime_error(
            "StateVector: qubit cap exceeded (" + std::to_string(n_total()) +
            " > " + std::to_string(max_qubits()) +
            "); raise KRYLOVGRAD_MAX_QUBITS if intended");
    amp_.assign(std::size_t{1} << n_total(), Complex{0.0, 0.0});
}

StateVector StateVector::computational_basis(int n_system, int n_ancilla,
                                             std::uint64_t index) {
    StateVector state(n_system, n_ancilla);
    if (index >= state.size())
        throw std::invalid_argument("computational_basis: index too large");
    state.amp_[index] = {1.0, 0.0};
    return state;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amp_)
        sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0.0)
        throw std::runtime_error("StateVector: cannot normalize zero state");
    for (auto &a : amp_)
        a /= n;
}

void StateVector::dump_binary(const std::string &path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("dump_binary: cannot open " + path);
    for (const auto &a : amp_) {
        double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char *>(&re), sizeof(double));
        out.write(reinterpret_cast<const char *>(&im), sizeof(double));
    }
}

StateVector StateVector::load_binary(const std::string &path, int n_system,
                                     int n_ancilla) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("load_binary: cannot open " + path);
    StateVector state(n_system, n_ancilla);
    for (auto &a : state.amp_) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char *>(&re), sizeof(double));
        in.read(reinterpret_cast<char *>(&im), sizeof(double));
        if (!in)
            throw std::runtime_error("load_binary: truncated file " + path);
        a = {re, im};
    }
    return state;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product: size mismatch");
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += std::conj(a[i]) * b[i];
    return sum;
}

StateVector apply_pauli_sum(const StateVector &state, const PauliSum &op) {
    if (op.n_qubits() != state.n_system() &&
        op.n_qubits() != state.n_total())
        throw std::invalid_argument(
            "apply_pauli_sum: operator does not match the system or full "
            "register");
    StateVector out(state.n_system(), state.n_ancilla());
    const std::size_t dim = state.size();
    for (const auto &[coeff, term] : op.terms()) {
        const std::uint64_t x = term.x_mask();
        const std::uint64_t z = term.z_mask();
        // apply_to_basis(0) bakes in the i^k internal phase; the Z-mask sign
        // per basis index is applied in the loop.
        const Complex base = coeff * term.apply_to_basis(0).second;
        for (std::size_t i = 0; i < dim; ++i) {
            bool sign = std::popcount(z & i) & 1;
            out[i ^ x] += sign ? -base * state[i] : base * state[i];
        }
    }
    return out;
}

void apply_pauli_term_inplace(StateVector &state, const PauliTerm &term) {
    if (term.n_qubits() != state.n_system() &&
        term.n_qubits() != state.n_total())
        throw std::invalid_argument("apply_pauli_term_inplace: register "
                                    "mismatch");
    const std::uint64_t x = term.x_mask();
    const std::uint64_t z = term.z_mask();
    const Complex base = term.apply_to_basis(0).second;
    const std::size_t dim = state.size();
    if (x == 0) {
        for (std::size_t i = 0; i < dim; ++i) {
            bool sign = std::popcount(z & i) & 1;
            state[i] *= sign ? -base : base;
        }
        return;
    }
    std::vector<Complex> scratch(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        bool sign = std::popcount(z & i) & 1;
        scratch[i ^ x] = sign ? -base * state[i] : base * state[i];
    }
    state.amplitudes().swap(scratch);
}

double expectation(const StateVector &state, const PauliSum &op) {
    if (!op.is_hermitian())
        throw std::invalid_argument("expectation: non-hermitian observable");
    double nrm2 = 0.0;
    for (const auto &a : state.amplitudes())
        nrm2 += std::norm(a);
    if (nrm2 < 1e-300)
        throw std::invalid_argument("expectation: zero-norm state");
    if (op.n_qubits() != state.n_system() &&
        op.n_qubits() != state.n_total())
        throw std::invalid_argument("expectation: register mismatch");
    Complex acc{0.0, 0.0};
    const std::size_t dim = state.size();
    for (const auto &[coeff, term] : op.terms()) {
        const std::uint64_t x = term.x_mask();
        const std::uint64_t z = term.z_mask();
        const Complex base = term.apply_to_basis(0).second;
        Complex val{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) {
            bool sign = std::popcount(z & i) & 1;
            Complex moved = sign ? -base * state[i] : base * state[i];
            val += std::conj(state[i ^ x]) * moved;
        }
        acc += coeff * val;
    }
    acc /= nrm2;
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("expectation: imaginary residual above "
                                 "tolerance");
    return acc.real();
}

double pauli_variance(const StateVector &state, const PauliTerm &p) {
    if (!p.is_hermitian())
        throw std::invalid_argument("pauli_variance: imaginary-phase Pauli");
    PauliSum sum(p.n_qubits());
    sum.add({1.0, 0.0}, p);
    double mean = expectation(state, sum);
    return 1.0 - mean * mean;
}

} // namespace krylovgrad

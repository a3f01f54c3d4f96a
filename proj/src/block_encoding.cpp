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

#include "krylovgrad/block_encoding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace krylovgrad {

namespace {

int ancilla_count(std::size_t n_terms) {
    int n = 0;
    while ((std::size_t{1} << n) < n_terms)
        ++n;
    return n;
}

} // namespace

BlockEncoding::BlockEncoding(LcuOperator op) : source_(std::move(op)) {
    if (source_.size() == 0)
        throw std::invalid_argument("BlockEncoding: empty LCU");
    for (const auto &term : source_.terms()) {
        if (term.pauli.is_identity_letters())
            throw std::invalid_argument(
                "BlockEncoding: identity term present; split it off first");
        if (!term.pauli.is_hermitian())
            throw std::invalid_argument(
                "BlockEncoding: imaginary-phase term");
    }
    n_ancilla_ = ancilla_count(source_.size());
    g_amp_.assign(std::size_t{1} << n_ancilla_, 0.0);
    const double lam = source_.lambda();
    for (std::size_t k = 0; k < source_.size(); ++k)
        g_amp_[k] = std::sqrt(source_.terms()[k].alpha / lam);
}

void BlockEncoding::prepare_g(StateVector &state) const {
    if (state.n_ancilla() < n_ancilla_ ||
        state.n_system() != n_system())
        throw std::invalid_argument("prepare_g: register mismatch");
    const std::size_t sys_dim = std::size_t{1} << n_system();
    const std::size_t anc_dim = std::size_t{1} << n_ancilla_;
    // Amplitude must live entirely in the ancilla-zero block.
    for (std::size_t i = sys_dim; i < state.size(); ++i) {
        if (std::norm(state[i]) > 1e-24)
            throw std::invalid_argument(
                "prepare_g: ancilla register is not |0>");
    }
    for (std::size_t s = 0; s < sys_dim; ++s) {
        Complex base = state[s];
        if (base == Complex{0.0, 0.0})
            continue;
        for (std::size_t k = anc_dim; k-- > 0;)
            state[(k << n_system()) | s] = g_amp_[k] * base;
    }
}

void BlockEncoding::select_span(std::span<Complex> amp, bool conjugate) const {
    const int ns = n_system();
    const std::size_t block = std::size_t{1} << (ns + n_ancilla_);
    if (amp.size() != block)
        throw std::invalid_argument("select_span: size mismatch");
    const std::size_t sys_dim = std::size_t{1} << ns;
    std::vector<Complex> scratch(sys_dim);
    for (std::size_t k = 0; k < (std::size_t{1} << n_ancilla_); ++k) {
        if (k >= source_.size())
            continue; // padded ancilla states: identity
        const PauliTerm &p = source_.terms()[k].pauli;
        const std::uint64_t x = p.x_mask();
        const std::uint64_t z = p.z_mask();
        Complex base = p.apply_to_basis(0).second;
        if (conjugate)
            base = std::conj(base);
        Complex *blockp = amp.data() + (k << ns);
        for (std::size_t s = 0; s < sys_dim; ++s) {
            bool sign = std::popcount(z & s) & 1;
            scratch[s ^ x] = sign ? -base * blockp[s] : base * blockp[s];
        }
        std::copy(scratch.begin(), scratch.end(), blockp);
    }
}

void BlockEncoding::reflect_g_span(std::span<Complex> amp) const {
    const int ns = n_system();
    const std::size_t sys_dim = std::size_t{1} << ns;
    const std::size_t anc_dim = std::size_t{1} << n_ancilla_;
    if (amp.size() != (sys_dim << n_ancilla_))
        throw std::invalid_argument("reflect_g_span: size mismatch");
    for (std::size_t s = 0; s < sys_dim; ++s) {
        Complex overlap{0.0, 0.0};
        for (std::size_t k = 0; k < anc_dim; ++k)
            overlap += g_amp_[k] * amp[(k << ns) | s];
        overlap *= 2.0;
        for (std::size_t k = 0; k < anc_dim; ++k) {
            Complex &a = amp[(k << ns) | s];
            a = overlap * g_amp_[k] - a;
        }
    }
}

void BlockEncoding::g_phase_span(std::span<Complex> amp, double phi) const {
    const int ns = n_system();
    const std::size_t sys_dim = std::size_t{1} << ns;
    const std::size_t anc_dim = std::size_t{1} << n_ancilla_;
    const Complex e_plus{std::cos(phi), std::sin(phi)};
    const Complex e_minus = std::conj(e_plus);
    for (std::size_t s = 0; s < sys_dim; ++s) {
        Complex overlap{0.0, 0.0};
        for (std::size_t k = 0; k < anc_dim; ++k)
            overlap += g_amp_[k] * amp[(k << ns) | s];
        // e^{i phi (2|G><G|-1)} = e^{-i phi} + (e^{i phi} - e^{-i phi})|G><G|
        Complex scale = (e_plus - e_minus) * overlap;
        for (std::size_t k = 0; k < anc_dim; ++k) {
            Complex &a = amp[(k << ns) | s];
            a = e_minus * a + scale * g_amp_[k];
        }
    }
}

namespace {

template <typename F>
void for_each_block(StateVector &state, int block_qubits, F &&f) {
    const std::size_t block = std::size_t{1} << block_qubits;
    const std::size_t n_blocks = state.size() / block;
    for (std::size_t b = 0; b < n_blocks; ++b)
        f(std::span<Complex>(state.amplitudes().data() + b * block, block));
}

} // namespace

void BlockEncoding::apply_select(StateVector &state) const {
    if (state.n_ancilla() < n_ancilla_ || state.n_system() != n_system())
        throw std::invalid_argument("apply_select: register mismatch");
    for_each_block(state, n_system() + n_ancilla_,
                   [&](std::span<Complex> amp) { select_span(amp, false); });
}

void BlockEncoding::apply_select_conjugated(StateVector &state) const {
    if (state.n_ancilla() < n_ancilla_ || state.n_system() != n_system())
        throw std::invalid_argument("apply_select: register mismatch");
    for_each_block(state, n_system() + n_ancilla_,
                   [&](std::span<Complex> amp) { select_span(amp, true); });
}

void BlockEncoding::apply_reflect_g(StateVector &state) const {
    if (state.n_ancilla() < n_ancilla_ || state.n_system() != n_system())
        throw std::invalid_argument("apply_reflect_g: register mismatch");
    for_each_block(state, n_system() + n_ancilla_,
                   [&](std::span<Complex> amp) { reflect_g_span(amp); });
}

void BlockEncoding::apply_iterate(StateVector &state) const {
    apply_select(state);
    apply_reflect_g(state);
}

void BlockEncoding::apply_g_phase(StateVector &state, double phi) const {
    if (state.n_ancilla() < n_ancilla_ || state.n_system() != n_system())
        throw std::invalid_argument("apply_g_phase: register mismatch");
    for_each_block(state, n_system() + n_ancilla_,
                   [&](std::span<Complex> amp) { g_phase_span(amp, phi); });
}

StateVector BlockEncoding::project_g(const StateVector &state) const {
    if (state.n_ancilla() != n_ancilla_ || state.n_system() != n_system())
        throw std::invalid_argument("project_g: register mismatch");
    StateVector out(n_system(), 0);
    const std::size_t sys_dim = std::size_t{1} << n_system();
    for (std::size_t s = 0; s < sys_dim; ++s) {
        Complex overlap{0.0, 0.0};
        for (std::size_t k = 0; k < g_amp_.size(); ++k)
            overlap += g_amp_[k] * state[(k << n_system()) | s];
        out[s] = overlap;
    }
    return out;
}

std::vector<StateVector>
chebyshev_apply_all(const BlockEncoding &be, const StateVector &psi0, int n,
                    ChebyshevMethod method) {
    if (n < 0)
        throw std::invalid_argument("chebyshev_apply: negative order");
    if (psi0.n_system() != be.n_system() || psi0.n_ancilla() != 0)
        throw std::invalid_argument("chebyshev_apply: psi0 must be a bare "
                                    "system-register state");
    std::vector<StateVector> out;
    out.reserve(n + 1);
    if (method == ChebyshevMethod::recurrence) {
        const PauliSum h = be.source().to_pauli_sum();
        const double inv_lambda = 1.0 / be.lambda();
        out.push_back(psi0);
        if (n == 0)
            return out;
        StateVector t1 = apply_pauli_sum(psi0, h);
        for (auto &a : t1.amplitudes())
            a *= inv_lambda;
        out.push_back(std::move(t1));
        for (int k = 2; k <= n; ++k) {
            StateVector next = apply_pauli_sum(out[k - 1], h);
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = 2.0 * inv_lambda * next[i] - out[k - 2][i];
            out.push_back(std::move(next));
        }
        return out;
    }
    // Block-encoding path: T_k(H)|psi0> = <G| W^k |G>|psi0>.
    StateVector reg(be.n_system(), be.n_ancilla());
    const std::size_t sys_dim = std::size_t{1} << be.n_system();
    for (std::size_t s = 0; s < sys_dim; ++s)
        reg[s] = psi0[s];
    be.prepare_g(reg);
    out.push_back(be.project_g(reg));
    for (int k = 1; k <= n; ++k) {
        be.apply_iterate(reg);
        out.push_back(be.project_g(reg));
    }
    return out;
}

StateVector chebyshev_apply(const BlockEncoding &be, const StateVector &psi0,
                            int n, ChebyshevMethod method) {
    auto all = chebyshev_apply_all(be, psi0, n, method);
    return std::move(all.back());
}

} // namespace krylovgrad

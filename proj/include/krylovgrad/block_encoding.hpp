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

#include <span>
#include <vector>

#include "krylovgrad/molecular.hpp"
#include "krylovgrad/statevector.hpp"

namespace krylovgrad {

/// LCU block encoding of H = sum_k alpha_k P_k / lambda on an ancilla
/// register of ceil(log2(#terms)) qubits:
///   prepare G: |0>_a -> |G>_a = sum_k sqrt(alpha_k/lambda) |k>_a,
///   select U:  |k>_a |psi> -> |k>_a P_k |psi>,
///   R_G = (2|G><G| - 1) (x) 1,   iterate W = R_G U.
/// The ancilla register occupies the bits directly above the system register;
/// any bits above the ancillas are treated as spectators by every operation.
/// Unused ancilla basis states carry zero amplitude in |G>.
class BlockEncoding {
  public:
    /// The operator must have no identity component (split it off first) and
    /// only real-phase terms.
    explicit BlockEncoding(LcuOperator op);

    const LcuOperator &source() const { return source_; }
    int n_system() const { return source_.n_qubits(); }
    int n_ancilla() const { return n_ancilla_; }
    double lambda() const { return source_.lambda(); }
    const std::vector<double> &g_amplitudes() const { return g_amp_; }

    /// |0>_a |psi> -> |G>_a |psi>; the ancilla register must hold |0>.
    void prepare_g(StateVector &state) const;

    void apply_select(StateVector &state) const;
    void apply_reflect_g(StateVector &state) const;

    /// One iterate W = R_G * U.
    void apply_iterate(StateVector &state) const;

    /// exp(i phi (2|G><G| - 1)) on the ancilla register; the single-qubit
    /// QSP phase rotation lifted to the qubitized register.
    void apply_g_phase(StateVector &state, double phi) const;

    /// Selected-Pauli application with conjugated terms (P_k -> P_k^*);
    /// used for the U_Phi^* branch of state preparation.
    void apply_select_conjugated(StateVector &state) const;

    /// <G|_a state: contracts the ancilla register against |G>, returning a
    /// system-register vector. The state must not have spectator bits.
    StateVector project_g(const StateVector &state) const;

    /// Raw-buffer variants operating on a span holding a (ancilla x system)
    /// register block; these power the controlled branches of the QSP
    /// state-preparation circuit.
    void select_span(std::span<Complex> amp, bool conjugate) const;
    void reflect_g_span(std::span<Complex> amp) const;
    void g_phase_span(std::span<Complex> amp, double phi) const;

  private:
    LcuOperator source_;
    int n_ancilla_;
    std::vector<double> g_amp_; // length 2^n_ancilla, padded with zeros
};

enum class ChebyshevMethod {
    block_encoding, // project <G| W^n |G>|psi0>
    recurrence      // classical T_{n+1} = 2 H T_n - T_{n-1}
};

/// T_n(H)|psi0> for the rescaled H = sum alpha_k P_k / lambda; psi0 is a
/// system-register state. Both methods agree to numerical precision.
StateVector chebyshev_apply(const BlockEncoding &be, const StateVector &psi0,
                            int n,
                            ChebyshevMethod method =
                                ChebyshevMethod::recurrence);

/// T_0..T_n applied to psi0 in one sweep.
std::vector<StateVector>
chebyshev_apply_all(const BlockEncoding &be, const StateVector &psi0, int n,
                    ChebyshevMethod method = ChebyshevMethod::recurrence);

} // namespace krylovgrad

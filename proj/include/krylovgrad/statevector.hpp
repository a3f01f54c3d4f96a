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

#include <complex>
#include <string>
#include <vector>

#include "krylovgrad/pauli.hpp"

namespace krylovgrad {

/// Default cap on total qubits per statevector; override with the
/// KRYLOVGRAD_MAX_QUBITS environment variable or set_max_qubits().
int max_qubits();
void set_max_qubits(int n);

/// Dense complex amplitudes over system (low bits) and ancilla (high bits)
/// registers: global basis index = (ancilla_index << n_system) | system_index.
class StateVector {
  public:
    StateVector(int n_system, int n_ancilla = 0);

    static StateVector computational_basis(int n_system, int n_ancilla,
                                           std::uint64_t index);

    int n_system() const { return n_system_; }
    int n_ancilla() const { return n_ancilla_; }
    int n_total() const { return n_system_ + n_ancilla_; }
    std::size_t size() const { return amp_.size(); }

    Complex &operator[](std::size_t i) { return amp_[i]; }
    const Complex &operator[](std::size_t i) const { return amp_[i]; }
    const std::vector<Complex> &amplitudes() const { return amp_; }
    std::vector<Complex> &amplitudes() { return amp_; }

    double norm() const;
    void normalize();

    /// Little-endian interleaved re/im doubles; debugging aid, not a
    /// stability contract.
    void dump_binary(const std::string &path) const;
    static StateVector load_binary(const std::string &path, int n_system,
                                   int n_ancilla);

  private:
    int n_system_;
    int n_ancilla_;
    std::vector<Complex> amp_;
};

Complex inner_product(const StateVector &a, const StateVector &b);

/// op |state>. The operator must act on the system register (ancillas
/// spectate) or, when its qubit count equals the full register, on all
/// qubits. The result is not normalized when op is not unitary.
StateVector apply_pauli_sum(const StateVector &state, const PauliSum &op);

/// In-place single-term application (unitary up to the term's phase).
void apply_pauli_term_inplace(StateVector &state, const PauliTerm &term);

/// <state|op|state> / <state|state>. Throws on a non-hermitian op or a
/// zero-norm state; the imaginary residual must be below 1e-10.
double expectation(const StateVector &state, const PauliSum &op);

/// Single-shot measurement variance 1 - <P>^2 of a real-phase Pauli string
/// on a normalized state.
double pauli_variance(const StateVector &state, const PauliTerm &p);

} // namespace krylovgrad

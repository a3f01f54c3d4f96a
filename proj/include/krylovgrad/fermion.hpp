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
#include <vector>

#include "krylovgrad/pauli.hpp"

namespace krylovgrad {

/// One ladder operator acting on a fermionic mode.
struct Ladder {
    int mode;
    bool creation;

    bool operator==(const Ladder &) const = default;
};

/// A sum of products of fermionic creation/annihilation operators. Each term
/// stores its ladder factors in operator order (leftmost factor first).
class FermionOperator {
  public:
    struct Term {
        Complex coefficient;
        std::vector<Ladder> ladders;
    };

    FermionOperator() = default;

    void add_term(Complex coefficient, std::vector<Ladder> ladders);

    /// a_p^dagger a_q
    static FermionOperator excitation(int p, int q, Complex coeff = 1.0);

    const std::vector<Term> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Largest mode index appearing, -1 when empty.
    int max_mode() const;

    FermionOperator &operator+=(const FermionOperator &other);
    friend FermionOperator operator*(const FermionOperator &a,
                                     const FermionOperator &b);

    /// Rewrites the operator with creation operators (mode-ascending) to the
    /// left of annihilation operators (mode-descending), applying fermionic
    /// anticommutation rules; like terms are merged and zero terms dropped.
    /// The result is a fixed point of this transformation.
    FermionOperator normal_ordered() const;

  private:
    std::vector<Term> terms_;
};

/// Jordan-Wigner image of a fermionic operator on `n_qubits` qubits, mapping
/// mode p to qubit p with a Z string on qubits 0..p-1:
///   a_p   = Z_0..Z_{p-1} (X_p + iY_p)/2,
///   a_p^+ = Z_0..Z_{p-1} (X_p - iY_p)/2.
/// Throws if any mode index is >= n_qubits.
PauliSum jordan_wigner(const FermionOperator &op, int n_qubits);

} // namespace krylovgrad

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
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace krylovgrad {

using Complex = std::complex<double>;

/// A signed/phased Pauli string on up to 64 qubits, stored in symplectic
/// form: the operator is i^k * X^x * Z^z with k in {0,1,2,3}. Qubit q
/// corresponds to bit q of the masks; the letter on qubit q is Y exactly
/// when both masks have bit q set (Y = i*X*Z).
class PauliTerm {
  public:
    /// Identity on `n_qubits` qubits.
    explicit PauliTerm(int n_qubits);

    /// Build from a letter string, qubit 0 first (e.g. "XIZ" is X0 Z2).
    /// `phase` must be one of {1, i, -1, -i}.
    static PauliTerm from_letters(const std::string &letters,
                                  Complex phase = {1.0, 0.0});

    static PauliTerm from_masks(int n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask, int quarter_turns = 0);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }
    /// Power of i in the internal i^k X^x Z^z representation.
    int quarter_turns() const { return quarters_; }

    /// The displayed phase relative to the plain letter string, in
    /// {1, i, -1, -i}: term = phase() * (tensor product of I/X/Y/Z).
    Complex phase() const;

    /// True when the letter part is the identity (both masks zero).
    bool is_identity_letters() const { return x_mask_ == 0 && z_mask_ == 0; }

    /// Hermitian iff the displayed phase is real.
    bool is_hermitian() const;

    /// Complex conjugate in the computational basis.
    PauliTerm conjugated() const;

    /// Same letters with displayed phase forced to +1.
    PauliTerm letters_only() const;

    /// Action on a computational basis state: P|idx> = factor |new_idx>.
    std::pair<std::uint64_t, Complex>
    apply_to_basis(std::uint64_t idx) const;

    /// Letter string, qubit 0 first (phase not included).
    std::string letters() const;

    friend PauliTerm operator*(const PauliTerm &a, const PauliTerm &b);
    bool operator==(const PauliTerm &other) const = default;

  private:
    PauliTerm(int n_qubits, std::uint64_t x, std::uint64_t z, int quarters);

    int n_qubits_;
    std::uint64_t x_mask_;
    std::uint64_t z_mask_;
    int quarters_; // 0..3
};

/// Product preserving the accumulated phase. Both operands must act on the
/// same number of qubits.
PauliTerm pauli_product(const PauliTerm &a, const PauliTerm &b);

/// A complex-weighted sum of Pauli letter strings in canonical merged form:
/// stored coefficients multiply phase-free letter strings, duplicate strings
/// are merged, and terms with |coefficient| < drop_threshold are removed.
class PauliSum {
  public:
    static constexpr double drop_threshold = 1e-12;

    PauliSum() = default;
    explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

    static PauliSum identity(int n_qubits, Complex coeff = {1.0, 0.0});

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds coeff * term (the term's displayed phase is folded into the
    /// stored coefficient).
    void add(Complex coeff, const PauliTerm &term);

    /// Terms in a deterministic (mask-sorted) order. Each PauliTerm carries
    /// displayed phase +1.
    std::vector<std::pair<Complex, PauliTerm>> terms() const;

    bool is_hermitian(double tol = 1e-10) const;

    /// Largest |coefficient|, 0 for the empty sum.
    double max_abs_coefficient() const;

    /// Coefficient of the identity string (0 if absent).
    Complex identity_coefficient() const;

    PauliSum conjugated() const;

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator*=(Complex scalar);
    friend PauliSum operator+(PauliSum a, const PauliSum &b);
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b);
    friend PauliSum operator*(Complex scalar, PauliSum a);

  private:
    using Key = std::pair<std::uint64_t, std::uint64_t>; // (x_mask, z_mask)
    int n_qubits_ = 0;
    std::map<Key, Complex> terms_;
};

} // namespace krylovgrad

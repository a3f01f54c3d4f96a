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

#include "krylovgrad/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace krylovgrad {

namespace {

constexpr Complex kQuarterPhases[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int quarter_of(Complex phase) {
    for (int k = 0; k < 4; ++k) {
        if (std::abs(phase - kQuarterPhases[k]) < 1e-12)
            return k;
    }
    throw std::invalid_argument("PauliTerm phase must be one of {1,i,-1,-i}");
}

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 64)
        throw std::invalid_argument("PauliTerm supports 1..64 qubits");
}

} // namespace

PauliTerm::PauliTerm(int n_qubits)
    : n_qubits_(n_qubits), x_mask_(0), z_mask_(0), quarters_(0) {
    check_qubit_count(n_qubits);
}

PauliTerm::PauliTerm(int n_qubits, std::uint64_t x, std::uint64_t z,
                     int quarters)
    : n_qubits_(n_qubits), x_mask_(x), z_mask_(z),
      quarters_(((quarters % 4) + 4) % 4) {}

PauliTerm PauliTerm::from_masks(int n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask, int quarter_turns) {
    check_qubit_count(n_qubits);
    if (n_qubits < 64 && ((x_mask | z_mask) >> n_qubits) != 0)
        throw std::invalid_argument("Pauli mask bit set beyond qubit count");
    return PauliTerm(n_qubits, x_mask, z_mask, quarter_turns);
}

PauliTerm PauliTerm::from_letters(const std::string &letters, Complex phase) {
    check_qubit_count(static_cast<int>(letters.size()));
    std::uint64_t x = 0, z = 0;
    int n_y = 0;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
        case 'I':
            break;
        case 'X':
            x |= std::uint64_t{1} << q;
            break;
        case 'Y':
            x |= std::uint64_t{1} << q;
            z |= std::uint64_t{1} << q;
            ++n_y;
            break;
        case 'Z':
            z |= std::uint64_t{1} << q;
            break;
        default:
            throw std::invalid_argument("Pauli letters must be I/X/Y/Z");
        }
    }
    // letters = i^{n_Y} X^x Z^z, so i^k = phase * i^{n_Y}.
    return PauliTerm(static_cast<int>(letters.size()), x, z,
                     quarter_of(phase) + n_y);
}

Complex PauliTerm::phase() const {
    int n_y = std::popcount(x_mask_ & z_mask_);
    return kQuarterPhases[((quarters_ - n_y) % 4 + 4) % 4];
}

bool PauliTerm::is_hermitian() const {
    return std::abs(phase().imag()) < 1e-12;
}

PauliTerm PauliTerm::conjugated() const {
    // conj(i^k X^x Z^z) = i^{-k} X^x Z^z.
    return PauliTerm(n_qubits_, x_mask_, z_mask_, -quarters_);
}

PauliTerm PauliTerm::letters_only() const {
    int n_y = std::popcount(x_mask_ & z_mask_);
    return PauliTerm(n_qubits_, x_mask_, z_mask_, n_y);
}

std::pair<std::uint64_t, Complex>
PauliTerm::apply_to_basis(std::uint64_t idx) const {
    // Z^z acts first: (-1)^{|z & idx|}; then X^x flips bits.
    int sign = std::popcount(z_mask_ & idx) & 1;
    Complex factor = kQuarterPhases[(quarters_ + 2 * sign) % 4];
    return {idx ^ x_mask_, factor};
}

std::string PauliTerm::letters() const {
    std::string out(static_cast<std::size_t>(n_qubits_), 'I');
    for (int q = 0; q < n_qubits_; ++q) {
        bool x = (x_mask_ >> q) & 1;
        bool z = (z_mask_ >> q) & 1;
        if (x && z)
            out[q] = 'Y';
        else if (x)
            out[q] = 'X';
        else if (z)
            out[q] = 'Z';
    }
    return out;
}

PauliTerm operator*(const PauliTerm &a, const PauliTerm &b) {
    if (a.n_qubits_ != b.n_qubits_)
        throw std::invalid_argument("Pauli product: mismatched qubit counts");
    // (X^xa Z^za)(X^xb Z^zb) = (-1)^{|za & xb|} X^{xa^xb} Z^{za^zb}.
    int swaps = std::popcount(a.z_mask_ & b.x_mask_) & 1;
    return PauliTerm(a.n_qubits_, a.x_mask_ ^ b.x_mask_,
                     a.z_mask_ ^ b.z_mask_,
                     a.quarters_ + b.quarters_ + 2 * swaps);
}

PauliTerm pauli_product(const PauliTerm &a, const PauliTerm &b) {
    return a * b;
}

PauliSum PauliSum::identity(int n_qubits, Complex coeff) {
    PauliSum sum(n_qubits);
    sum.add(coeff, PauliTerm(n_qubits));
    return sum;
}

void PauliSum::add(Complex coeff, const PauliTerm &term) {
    if (n_qubits_ == 0)
        n_qubits_ = term.n_qubits();
    if (term.n_qubits() != n_qubits_)
        throw std::invalid_argument("PauliSum: mismatched qubit counts");
    Key key{term.x_mask(), term.z_mask()};
    Complex value = coeff * term.phase();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (std::abs(value) >= drop_threshold)
            terms_.emplace(key, value);
        return;
    }
    it->second += value;
    if (std::abs(it->second) < drop_threshold)
        terms_.erase(it);
}

std::vector<std::pair<Complex, PauliTerm>> PauliSum::terms() const {
    std::vector<std::pair<Complex, PauliTerm>> out;
    out.reserve(terms_.size());
    for (const auto &[key, coeff] : terms_) {
        PauliTerm term = PauliTerm::from_masks(
            n_qubits_, key.first, key.second,
            std::popcount(key.first & key.second));
        out.emplace_back(coeff, term);
    }
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto &[key, coeff] : terms_) {
        (void)key;
        if (std::abs(coeff.imag()) > tol)
            return false;
    }
    return true;
}

double PauliSum::max_abs_coefficient() const {
    double best = 0.0;
    for (const auto &[key, coeff] : terms_) {
        (void)key;
        best = std::max(best, std::abs(coeff));
    }
    return best;
}

Complex PauliSum::identity_coefficient() const {
    auto it = terms_.find(Key{0, 0});
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

PauliSum PauliSum::conjugated() const {
    PauliSum out(n_qubits_);
    for (const auto &[key, coeff] : terms_) {
        // Letter strings have i^{n_Y} internal phase; conjugation flips the
        // sign of every Y, i.e. multiplies the string by (-1)^{n_Y}.
        int n_y = std::popcount(key.first & key.second);
        Complex sign = (n_y & 1) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
        out.terms_[key] = std::conj(coeff) * sign;
    }
    return out;
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    if (n_qubits_ == 0)
        n_qubits_ = other.n_qubits_;
    if (!other.empty() && other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("PauliSum: mismatched qubit counts");
    for (const auto &[key, coeff] : other.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (std::abs(it->second) < drop_threshold)
                terms_.erase(it);
        }
    }
    return *this;
}

PauliSum &PauliSum::operator*=(Complex scalar) {
    if (std::abs(scalar) < drop_threshold) {
        terms_.clear();
        return *this;
    }
    for (auto &[key, coeff] : terms_) {
        (void)key;
        coeff *= scalar;
    }
    return *this;
}

PauliSum operator+(PauliSum a, const PauliSum &b) {
    a += b;
    return a;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    if (a.n_qubits_ != b.n_qubits_)
        throw std::invalid_argument("PauliSum: mismatched qubit counts");
    PauliSum out(a.n_qubits_);
    for (const auto &[ka, ca] : a.terms_) {
        PauliTerm ta = PauliTerm::from_masks(a.n_qubits_, ka.first, ka.second,
                                             std::popcount(ka.first &
                                                           ka.second));
        for (const auto &[kb, cb] : b.terms_) {
            PauliTerm tb = PauliTerm::from_masks(
                b.n_qubits_, kb.first, kb.second,
                std::popcount(kb.first & kb.second));
            out.add(ca * cb, ta * tb);
        }
    }
    return out;
}

PauliSum operator*(Complex scalar, PauliSum a) {
    a *= scalar;
    return a;
}

} // namespace krylovgrad

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

#include "krylovgrad/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace krylovgrad {

void FermionOperator::add_term(Complex coefficient,
                               std::vector<Ladder> ladders) {
    if (std::abs(coefficient) == 0.0)
        return;
    for (const auto &l : ladders) {
        if (l.mode < 0)
            throw std::invalid_argument("FermionOperator: negative mode");
    }
    terms_.push_back({coefficient, std::move(ladders)});
}

FermionOperator FermionOperator::excitation(int p, int q, Complex coeff) {
    FermionOperator op;
    op.add_term(coeff, {{p, true}, {q, false}});
    return op;
}

int FermionOperator::max_mode() const {
    int best = -1;
    for (const auto &term : terms_)
        for (const auto &l : term.ladders)
            best = std::max(best, l.mode);
    return best;
}

FermionOperator &FermionOperator::operator+=(const FermionOperator &other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

FermionOperator operator*(const FermionOperator &a, const FermionOperator &b) {
    FermionOperator out;
    for (const auto &ta : a.terms_) {
        for (const auto &tb : b.terms_) {
            std::vector<Ladder> ladders = ta.ladders;
            ladders.insert(ladders.end(), tb.ladders.begin(),
                           tb.ladders.end());
            out.add_term(ta.coefficient * tb.coefficient, std::move(ladders));
        }
    }
    return out;
}

namespace {

// Normal-order key: creators ascending then annihilators descending makes the
// canonical form unique for each monomial.
bool is_normal_ordered(const std::vector<Ladder> &ls) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        const Ladder &a = ls[i];
        const Ladder &b = ls[i + 1];
        if (!a.creation && b.creation)
            return false;
        if (a.creation && b.creation && a.mode > b.mode)
            return false;
        if (!a.creation && !b.creation && a.mode < b.mode)
            return false;
        if (a.mode == b.mode && a.creation == b.creation)
            return false; // a a or a+ a+ on the same mode vanishes
    }
    return true;
}

void normal_order_recursive(
    Complex coeff, std::vector<Ladder> ladders,
    std::map<std::vector<std::pair<int, bool>>, Complex> &acc) {
    for (std::size_t i = 0; i + 1 < ladders.size(); ++i) {
        Ladder &a = ladders[i];
        Ladder &b = ladders[i + 1];
        bool swap_needed = false;
        if (!a.creation && b.creation) {
            if (a.mode == b.mode) {
                // a_p a_p^+ = 1 - a_p^+ a_p
                std::vector<Ladder> contracted(ladders.begin(),
                                               ladders.begin() + i);
                contracted.insert(contracted.end(), ladders.begin() + i + 2,
                                  ladders.end());
                normal_order_recursive(coeff, std::move(contracted), acc);
                std::swap(a, b);
                normal_order_recursive(-coeff, std::move(ladders), acc);
                return;
            }
            swap_needed = true;
        } else if (a.creation && b.creation && a.mode > b.mode) {
            swap_needed = true;
        } else if (!a.creation && !b.creation && a.mode < b.mode) {
            swap_needed = true;
        } else if (a.mode == b.mode && a.creation == b.creation) {
            return; // nilpotent
        }
        if (swap_needed) {
            std::swap(a, b);
            normal_order_recursive(-coeff, std::move(ladders), acc);
            return;
        }
    }
    std::vector<std::pair<int, bool>> key;
    key.reserve(ladders.size());
    for (const auto &l : ladders)
        key.emplace_back(l.mode, l.creation);
    acc[key] += coeff;
}

} // namespace

FermionOperator FermionOperator::normal_ordered() const {
    std::map<std::vector<std::pair<int, bool>>, Complex> acc;
    for (const auto &term : terms_) {
        if (is_normal_ordered(term.ladders)) {
            std::vector<std::pair<int, bool>> key;
            for (const auto &l : term.ladders)
                key.emplace_back(l.mode, l.creation);
            acc[key] += term.coefficient;
        } else {
            normal_order_recursive(term.coefficient, term.ladders, acc);
        }
    }
    FermionOperator out;
    for (const auto &[key, coeff] : acc) {
        if (std::abs(coeff) < 1e-14)
            continue;
        std::vector<Ladder> ladders;
        ladders.reserve(key.size());
        for (const auto &[mode, creation] : key)
            ladders.push_back({mode, creation});
        out.terms_.push_back({coeff, std::move(ladders)});
    }
    return out;
}

PauliSum jordan_wigner(const FermionOperator &op, int n_qubits) {
    if (op.max_mode() >= n_qubits)
        throw std::invalid_argument("jordan_wigner: mode index out of range");
    PauliSum result(n_qubits);
    for (const auto &term : op.terms()) {
        PauliSum product = PauliSum::identity(n_qubits, term.coefficient);
        for (const auto &ladder : term.ladders) {
            std::uint64_t z_string =
                (std::uint64_t{1} << ladder.mode) - 1;
            std::uint64_t bit = std::uint64_t{1} << ladder.mode;
            PauliSum factor(n_qubits);
            factor.add({0.5, 0.0}, PauliTerm::from_masks(n_qubits, bit,
                                                         z_string, 0));
            // Y_p carries internal quarter phase 1; +- i/2 coefficient.
            Complex y_coeff =
                ladder.creation ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
            factor.add(y_coeff, PauliTerm::from_masks(n_qubits, bit,
                                                      z_string | bit, 1));
            product = product * factor;
        }
        result += product;
    }
    return result;
}

} // namespace krylovgrad

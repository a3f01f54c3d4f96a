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

#include "krylovgrad/krylov.hpp"

#include <cmath>
#include <iostream>
#include <set>
#include <stdexcept>

namespace krylovgrad {

namespace {

double real_inner(const StateVector &a, const StateVector &b) {
    return inner_product(a, b).real();
}

StateVector apply_rescaled(const BlockEncoding &be, const PauliSum &h,
                           const StateVector &v) {
    StateVector out = apply_pauli_sum(v, h);
    const double inv_lambda = 1.0 / be.lambda();
    for (auto &a : out.amplitudes())
        a *= inv_lambda;
    return out;
}

void symmetrize(Eigen::MatrixXd &m) {
    m = ((m + m.transpose()) / 2.0).eval();
}

} // namespace

KrylovMatrices build_matrices(const BlockEncoding &be,
                              const StateVector &psi0, int dim,
                              KrylovBasis basis) {
    if (dim < 1)
        throw std::invalid_argument("build_matrices: dim must be >= 1");
    if (dim > kMaxKrylovDim)
        throw std::invalid_argument("build_matrices: dim exceeds sanity cap");
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("build_matrices: psi0 not normalized");

    KrylovMatrices out;
    out.dim = dim;
    out.basis = basis;
    out.h_tilde = Eigen::MatrixXd::Zero(dim, dim);
    out.s_tilde = Eigen::MatrixXd::Zero(dim, dim);
    out.moments = Eigen::VectorXd::Zero(2 * dim);

    if (basis == KrylovBasis::monomial) {
        const PauliSum h = be.source().to_pauli_sum();
        std::vector<StateVector> vecs;
        vecs.reserve(dim);
        vecs.push_back(psi0);
        for (int i = 1; i < dim; ++i)
            vecs.push_back(apply_rescaled(be, h, vecs.back()));
        // Moments m_n = <psi0|H^n|psi0>; each measured once, the matrices
        // copy from the shared sequence so the Hankel shifts hold exactly.
        for (int n = 0; n <= 2 * dim - 2; ++n)
            out.moments(n) = real_inner(vecs[n / 2], vecs[(n + 1) / 2]);
        StateVector top = apply_rescaled(be, h, vecs[dim - 1]);
        out.moments(2 * dim - 1) = real_inner(vecs[dim - 1], top);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                out.h_tilde(i, j) = out.moments(i + j + 1);
                out.s_tilde(i, j) = out.moments(i + j);
            }
        return out;
    }

    // Chebyshev basis: T_0..T_{2D-1} vectors via the recurrence; matrix
    // entries are plain inner products, moments are <psi0|T_n|psi0>.
    auto t = chebyshev_apply_all(be, psi0, 2 * dim - 1,
                                 ChebyshevMethod::recurrence);
    for (int n = 0; n < 2 * dim; ++n)
        out.moments(n) = real_inner(t[0], t[n]);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            out.s_tilde(i, j) = real_inner(t[i], t[j]);
            // H T_j = T_1 T_j = (T_{j+1} + T_{|j-1|}) / 2
            if (j == 0)
                out.h_tilde(i, j) = real_inner(t[i], t[1]);
            else
                out.h_tilde(i, j) =
                    0.5 * (real_inner(t[i], t[j + 1]) +
                           real_inner(t[i], t[j - 1]));
        }
    symmetrize(out.h_tilde);
    symmetrize(out.s_tilde);
    return out;
}

KrylovSolution solve(const KrylovMatrices &mat, double threshold) {
    if (threshold < 0.0)
        throw std::invalid_argument("solve: threshold must be >= 0");
    const int dim = mat.dim;
    const double h_scale = std::max(mat.h_tilde.cwiseAbs().maxCoeff(), 1.0);
    if ((mat.h_tilde - mat.h_tilde.transpose()).cwiseAbs().maxCoeff() >
            1e-10 * h_scale ||
        (mat.s_tilde - mat.s_tilde.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("solve: matrices not symmetric");

    Eigen::MatrixXd h = (mat.h_tilde + mat.h_tilde.transpose()) / 2.0;
    Eigen::MatrixXd s = (mat.s_tilde + mat.s_tilde.transpose()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_eig(s);
    Eigen::VectorXd lam = s_eig.eigenvalues().cwiseMax(0.0);

    std::vector<int> keep;
    for (int i = 0; i < dim; ++i)
        if (lam(i) > 0.0 && lam(i) >= threshold)
            keep.push_back(i);
    if (keep.empty())
        throw SolverError("solve: no overlap eigenvalues above threshold");

    const int rank = static_cast<int>(keep.size());
    Eigen::MatrixXd x(dim, rank);
    for (int c = 0; c < rank; ++c)
        x.col(c) = s_eig.eigenvectors().col(keep[c]) /
                   std::sqrt(lam(keep[c]));

    Eigen::MatrixXd a = x.transpose() * h * x;
    symmetrize(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a_eig(a);

    KrylovSolution sol;
    sol.energies = a_eig.eigenvalues();
    sol.coefficients = x * a_eig.eigenvectors();
    sol.retained_rank = rank;
    sol.threshold = threshold;
    sol.overlap_eigenvalues = lam;
    sol.overlap_eigenvectors = s_eig.eigenvectors();

    // Deterministic sign: first nonvanishing coefficient positive.
    for (int c = 0; c < rank; ++c) {
        const double scale = sol.coefficients.col(c).cwiseAbs().maxCoeff();
        for (int i = 0; i < dim; ++i) {
            double v = sol.coefficients(i, c);
            if (std::abs(v) > 1e-12 * scale) {
                if (v < 0.0)
                    sol.coefficients.col(c) *= -1.0;
                break;
            }
        }
    }
    return sol;
}

double direct_energy_derivative(const BlockEncoding &be,
                                const StateVector &psi0, int dim,
                                double threshold, const PauliSum &v_rescaled,
                                int state_index) {
    if (!v_rescaled.is_hermitian())
        throw std::invalid_argument(
            "direct_energy_derivative: V must be hermitian");
    KrylovMatrices mat = build_matrices(be, psi0, dim, KrylovBasis::monomial);
    KrylovSolution sol = solve(mat, threshold);
    if (state_index < 0 || state_index >= sol.retained_rank)
        throw std::invalid_argument(
            "direct_energy_derivative: state index not retained");

    const PauliSum h = be.source().to_pauli_sum();
    std::vector<StateVector> powers;
    powers.reserve(2 * dim - 1);
    powers.push_back(psi0);
    for (int a = 1; a <= 2 * dim - 2; ++a)
        powers.push_back(apply_rescaled(be, h, powers.back()));
    std::vector<StateVector> v_powers;
    v_powers.reserve(powers.size());
    for (const auto &p : powers)
        v_powers.push_back(apply_pauli_sum(p, v_rescaled));

    // dm(n) = d<psi0|H^n|psi0>/dtheta via the product rule (Hankel again).
    Eigen::VectorXd dm = Eigen::VectorXd::Zero(2 * dim);
    for (int n = 1; n <= 2 * dim - 1; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k)
            acc += real_inner(powers[k - 1], v_powers[n - k]);
        dm(n) = acc;
    }
    Eigen::MatrixXd dh(dim, dim), ds(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            dh(i, j) = dm(i + j + 1);
            ds(i, j) = dm(i + j);
        }

    const Eigen::VectorXd c = sol.coefficients.col(state_index);
    const double e_m = sol.energies(state_index);
    const double denom = c.dot(mat.s_tilde * c);
    if (std::abs(denom - 1.0) > 1e-8)
        std::cerr << "krylovgrad: generalized-eigenpair normalization "
                     "deviates from 1 by "
                  << std::abs(denom - 1.0) << "\n";
    const double numer = c.dot(dh * c) - e_m * c.dot(ds * c);
    return numer / denom;
}

double physical_energy_derivative(const LcuOperator &hamiltonian,
                                  const StateVector &psi0, int dim,
                                  double threshold, const PauliSum &v_phys,
                                  int state_index) {
    auto [shift, h_rest] = hamiltonian.split_identity();
    (void)shift;
    if (h_rest.size() == 0)
        throw SolverError("physical_energy_derivative: Hamiltonian has no "
                          "non-identity part");
    const double lambda = h_rest.lambda();

    double v_id = 0.0;
    PauliSum v_rest(v_phys.n_qubits());
    double dlambda = 0.0;
    for (const auto &[coeff, term] : v_phys.terms()) {
        if (std::abs(coeff.imag()) > 1e-10)
            throw std::invalid_argument(
                "physical_energy_derivative: V must be hermitian");
        if (term.is_identity_letters()) {
            v_id += coeff.real();
            continue;
        }
        v_rest.add(coeff.real(), term);
        double c_h = h_rest.signed_coefficient(term);
        if (c_h != 0.0)
            dlambda += (c_h > 0.0 ? 1.0 : -1.0) * coeff.real();
    }

    // dH/dtheta of the rescaled operator: (V' - (dlambda/lambda) H') / lambda
    PauliSum v_rescaled = (Complex{1.0 / lambda, 0.0}) * v_rest;
    PauliSum h_part = h_rest.to_pauli_sum();
    h_part *= Complex{-dlambda / (lambda * lambda), 0.0};
    v_rescaled += h_part;

    BlockEncoding be(h_rest);
    KrylovMatrices mat = build_matrices(be, psi0, dim, KrylovBasis::monomial);
    KrylovSolution sol = solve(mat, threshold);
    if (state_index < 0 || state_index >= sol.retained_rank)
        throw std::invalid_argument(
            "physical_energy_derivative: state index not retained");
    const double e_resc = sol.energies(state_index);
    const double de_resc = direct_energy_derivative(
        be, psi0, dim, threshold, v_rescaled, state_index);
    return dlambda * e_resc + lambda * de_resc + v_id;
}

long count_distinct_measurements(int dim, MeasurementMode mode) {
    if (dim < 1)
        throw std::invalid_argument("count_distinct_measurements: dim >= 1");
    if (mode == MeasurementMode::energy)
        return 2L * dim - 1;
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 1; k <= i + j + 1; ++k)
                pairs.emplace(k - 1, i + j + 1 - k);
    return static_cast<long>(pairs.size());
}

} // namespace krylovgrad

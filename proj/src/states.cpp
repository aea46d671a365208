// Copyright 2026 The superactivation-sim Authors
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

#include "superact/states.hpp"

#include <algorithm>
#include <cmath>

namespace superact {

PureState::PureState(CVec amps, SystemLayout lay)
    : amplitudes(std::move(amps)), layout(std::move(lay)) {
    if (amplitudes.size() != layout.total_dim())
        throw std::invalid_argument("amplitude length does not match layout dimension");
    if (std::abs(amplitudes.norm() - 1.0) > kHermTol)
        throw std::invalid_argument("state vector is not normalized");
}

DensityMatrix::DensityMatrix(CMat m, SystemLayout lay)
    : matrix(std::move(m)), layout(std::move(lay)) {
    if (matrix.rows() != matrix.cols() || matrix.rows() != layout.total_dim())
        throw std::invalid_argument("density matrix dimension does not match layout");
    if (hermiticity_defect(matrix) > kHermTol)
        throw std::invalid_argument("density matrix is not Hermitian within tolerance");
    if (std::abs(matrix.trace().real() - 1.0) > kHermTol ||
        std::abs(matrix.trace().imag()) > kHermTol)
        throw std::invalid_argument("density matrix trace is not 1 within tolerance");
    auto evals = hermitian_eigenvalues(matrix);
    if (evals.front() < -kHermTol)
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(evals.front()));
}

CMat pauli_z() {
    CMat z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

PureState bell(int phase) {
    if (phase != 0 && phase != 1) throw std::invalid_argument("bell phase must be 0 or 1");
    CVec amps = CVec::Zero(4);
    const double r = 1.0 / std::sqrt(2.0);
    amps(0) = r;
    amps(3) = (phase == 0) ? r : -r;
    return PureState(std::move(amps), SystemLayout{{"A", 2}, {"B", 2}});
}

DensityMatrix classically_correlated() {
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix(std::move(m), SystemLayout{{"A", 2}, {"B", 2}});
}

namespace {

// Swap operator F|ij> = |ji> on C^d (x) C^d.
CMat swap_operator(Eigen::Index d) {
    CMat f = CMat::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
    return f;
}

}  // namespace

CMat symmetric_projector(Eigen::Index d) {
    return 0.5 * (identity(d * d) + swap_operator(d));
}

CMat antisymmetric_projector(Eigen::Index d) {
    return 0.5 * (identity(d * d) - swap_operator(d));
}

std::pair<DensityMatrix, DensityMatrix> hiding_flags(Eigen::Index d) {
    if (d < 2) throw std::invalid_argument("hiding flags need d >= 2");
    SystemLayout lay{{"A'", d}, {"B'", d}};
    CMat tau0 = symmetric_projector(d) * (2.0 / static_cast<double>(d * (d + 1)));
    CMat tau1 = antisymmetric_projector(d) * (2.0 / static_cast<double>(d * (d - 1)));
    return {DensityMatrix(std::move(tau0), lay), DensityMatrix(std::move(tau1), lay)};
}

DensityMatrix flagged_bell(Eigen::Index d) {
    if (d < 2) throw std::invalid_argument("flagged_bell needs d >= 2");
    auto [tau0, tau1] = hiding_flags(d);
    CMat m = 0.5 * (kron(bell(0).projector(), tau0.matrix) +
                    kron(bell(1).projector(), tau1.matrix));
    return DensityMatrix(std::move(m),
                         SystemLayout{{"A", 2}, {"B", 2}, {"A'", d}, {"B'", d}});
}

bool is_unitary(const CMat& v, double tol) {
    if (v.rows() != v.cols()) return false;
    return (v * v.adjoint() - identity(v.rows())).cwiseAbs().maxCoeff() <= tol;
}

CMat twist_unitary(const CMat& v, Eigen::Index d) {
    const Eigen::Index sd = d * d;
    if (v.rows() != sd || v.cols() != sd)
        throw std::invalid_argument("twist unitary must act on the d^2 shield space");
    if (!is_unitary(v)) throw std::invalid_argument("twist operator is not unitary");
    CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    // Controlled on B's qubit: identity branch for |0_B>, V for |1_B>.
    return kron(identity(2), kron(p0, identity(sd)) + kron(p1, v));
}

DensityMatrix twisted_private_state(const DensityMatrix& shield, const CMat& v) {
    if (shield.layout.size() != 2)
        throw std::invalid_argument("shield must live on two factors A', B'");
    const Eigen::Index d = shield.layout[0].dim;
    if (shield.layout[1].dim != d)
        throw std::invalid_argument("shield factors must have equal dimension");
    CMat u = twist_unitary(v, d);
    CMat base = kron(bell(0).projector(), shield.matrix);
    SystemLayout lay{{"A", 2}, {"B", 2},
                     {shield.layout[0].label, d}, {shield.layout[1].label, d}};
    return DensityMatrix(u * base * u.adjoint(), std::move(lay));
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi) {
    if (rho.dim() != psi.amplitudes.size())
        throw std::invalid_argument("fidelity: dimension mismatch");
    Complex val = psi.amplitudes.adjoint() * rho.matrix * psi.amplitudes;
    double f = val.real();
    if (f < -1e-12 || f > 1.0 + 1e-12)
        throw std::runtime_error("fidelity outside [0,1] beyond tolerance");
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace superact

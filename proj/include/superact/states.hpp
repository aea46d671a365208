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

#pragma once

#include "superact/qmat.hpp"

namespace superact {

/// Unit-norm state vector with a tensor-factor layout.
struct PureState {
    CVec amplitudes;
    SystemLayout layout;

    PureState(CVec amps, SystemLayout lay);
    CMat projector() const { return amplitudes * amplitudes.adjoint(); }
};

/// Hermitian, PSD, unit-trace matrix with a layout. The constructor
/// enforces all three invariants within 1e-10.
struct DensityMatrix {
    CMat matrix;
    SystemLayout layout;

    DensityMatrix(CMat m, SystemLayout lay);
    Eigen::Index dim() const { return matrix.rows(); }
};

/// Pauli Z on one qubit.
CMat pauli_z();

/// (|00> + (-1)^phase |11>)/sqrt(2) on [(A,2),(B,2)].
PureState bell(int phase);

/// (|00><00| + |11><11|)/2 on [(A,2),(B,2)].
DensityMatrix classically_correlated();

/// Projector onto the symmetric subspace of C^d (x) C^d.
CMat symmetric_projector(Eigen::Index d);
/// Projector onto the antisymmetric subspace of C^d (x) C^d.
CMat antisymmetric_projector(Eigen::Index d);

/// Werner-type hiding flags on [(A',d),(B',d)]: the normalized symmetric
/// and antisymmetric projectors. Globally orthogonal, locally hard to
/// tell apart for large d.
std::pair<DensityMatrix, DensityMatrix> hiding_flags(Eigen::Index d);

/// (|psi0><psi0| (x) tau0 + |psi1><psi1| (x) tau1)/2 on
/// [(A,2),(B,2),(A',d),(B',d)].
DensityMatrix flagged_bell(Eigen::Index d);

/// Controlled unitary |0_B><0_B| (x) I + |1_B><1_B| (x) V on the full
/// space [(A,2),(B,2),(A',d),(B',d)]; V acts on the shield A'B'.
CMat twist_unitary(const CMat& v, Eigen::Index d);

/// U (|psi0><psi0| (x) shield) U^dag with U = twist_unitary(v).
DensityMatrix twisted_private_state(const DensityMatrix& shield, const CMat& v);

/// <psi|rho|psi>, clamped to [0,1].
double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi);

/// True when v v^dag = I within tolerance.
bool is_unitary(const CMat& v, double tol = kHermTol);

}  // namespace superact

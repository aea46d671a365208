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

#include <optional>

#include "superact/capacity.hpp"

namespace superact {

/// One end-to-end protocol run: flagged Bell distribution, erasure of the
/// shield half, Bob's flag measurement and phase correction.
struct ProtocolReport {
    Eigen::Index d;
    double p;
    std::optional<DensityMatrix> final_ab;  // on [(A,2),(B,2)]
    double fidelity_psi0;
    double i_c;
    double branch_success;  // weight of the shield-arrived branch
    double branch_erased;
    double ppt_bound_flags;
};

/// Branch-resolved protocol: the erased branch keeps the classically
/// correlated marginal, the success branch runs Bob's measurement and
/// sigma_Z correction on the actual flagged state.
ProtocolReport run_protocol(Eigen::Index d, double p);

/// Independent oracle: full density-matrix evolution through the erasure
/// channel with the orthogonal |e> register, no branch shortcut.
ProtocolReport run_protocol_full_simulation(Eigen::Index d, double p);

/// U^dag rho U with U the twist controlled on B's qubit and v acting on
/// the shield A'B'.
DensityMatrix untwist(const DensityMatrix& rho, const CMat& v);

/// Cartesian sweep of run_protocol, d outer, p inner.
std::vector<ProtocolReport> sweep(const std::vector<Eigen::Index>& d_values,
                                  const std::vector<double>& p_values);

}  // namespace superact

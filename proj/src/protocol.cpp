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

#include "superact/protocol.hpp"

#include <cmath>
#include <sstream>

namespace superact {

namespace {

void check_protocol_args(Eigen::Index d, double p) {
    if (d < 2) throw std::invalid_argument("protocol needs flag dimension d >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erasure probability must be in [0,1]");
}

ProtocolReport finish_report(Eigen::Index d, double p, DensityMatrix final_ab,
                             double w_success, double w_erased) {
    auto [tau0, tau1] = hiding_flags(d);
    ProtocolReport rep;
    rep.d = d;
    rep.p = p;
    rep.fidelity_psi0 = fidelity_with_pure(final_ab, bell(0));
    rep.i_c = coherent_information_state(final_ab, {"B"}).i_c;
    rep.branch_success = w_success;
    rep.branch_erased = w_erased;
    rep.ppt_bound_flags = ppt_distinguishability_bound(tau0, tau1, {"B'"});
    rep.final_ab = std::move(final_ab);
    return rep;
}

}  // namespace

ProtocolReport run_protocol(Eigen::Index d, double p) {
    check_protocol_args(d, p);
    DensityMatrix rho = flagged_bell(d);

    // Success branch: Bob holds the whole flag, measures {sym, antisym},
    // and applies sigma_Z on his Bell qubit when the antisymmetric flag
    // fires.
    CMat pi0 = kron(identity(4), symmetric_projector(d));
    CMat pi1 = kron(identity(4), antisymmetric_projector(d));
    CMat correct = kron(identity(2), kron(pauli_z(), identity(d * d)));
    CMat post = pi0 * rho.matrix * pi0 +
                correct * (pi1 * rho.matrix * pi1) * correct.adjoint();
    auto [success_ab, ab_layout] = partial_trace(post, rho.layout, {"A", "B"});

    // Erased branch: flags discarded, only the classically correlated
    // marginal survives.
    CMat erased_ab = classically_correlated().matrix;

    CMat final_ab = (1.0 - p) * success_ab + p * erased_ab;
    return finish_report(d, p, DensityMatrix(std::move(final_ab), std::move(ab_layout)),
                         1.0 - p, p);
}

ProtocolReport run_protocol_full_simulation(Eigen::Index d, double p) {
    check_protocol_args(d, p);
    DensityMatrix rho = flagged_bell(d);
    DensityMatrix sent = apply(erasure_channel(p, d), rho, "A'");

    // A' now lives in C^{d+1}; the last coordinate is the erasure flag.
    CMat embed = CMat::Zero(d + 1, d);
    embed.topRows(d) = identity(d);
    CMat lift = kron(embed, identity(d));  // shield space into the enlarged one
    CMat pi0 = lift * symmetric_projector(d) * lift.adjoint();
    CMat pi1 = lift * antisymmetric_projector(d) * lift.adjoint();
    CMat q_erased = CMat::Zero(d + 1, d + 1);
    q_erased(d, d) = 1.0;

    CMat m_keep = kron(identity(4), pi0);
    CMat m_correct = kron(identity(2), kron(pauli_z(), pi1));
    CMat m_erased = kron(identity(4), kron(q_erased, identity(d)));

    CMat post = m_keep * sent.matrix * m_keep.adjoint() +
                m_correct * sent.matrix * m_correct.adjoint() +
                m_erased * sent.matrix * m_erased.adjoint();

    const double w_erased = (m_erased * sent.matrix).trace().real();
    const double w_success = 1.0 - w_erased;

    auto [final_ab, ab_layout] = partial_trace(post, sent.layout, {"A", "B"});
    return finish_report(d, p, DensityMatrix(std::move(final_ab), std::move(ab_layout)),
                         w_success, w_erased);
}

DensityMatrix untwist(const DensityMatrix& rho, const CMat& v) {
    if (rho.layout.size() != 4 || rho.layout[0].dim != 2 || rho.layout[1].dim != 2)
        throw std::invalid_argument("untwist expects a state on [(A,2),(B,2),(A',d),(B',d)]");
    const Eigen::Index d = rho.layout[2].dim;
    if (rho.layout[3].dim != d)
        throw std::invalid_argument("shield factors must have equal dimension");
    CMat u = twist_unitary(v, d);
    return DensityMatrix(u.adjoint() * rho.matrix * u, rho.layout);
}

std::vector<ProtocolReport> sweep(const std::vector<Eigen::Index>& d_values,
                                  const std::vector<double>& p_values) {
    if (d_values.empty() || p_values.empty())
        throw std::invalid_argument("empty sweep axis");
    std::vector<ProtocolReport> reports;
    reports.reserve(d_values.size() * p_values.size());
    for (Eigen::Index d : d_values) {
        for (double p : p_values) {
            try {
                reports.push_back(run_protocol(d, p));
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "sweep cell (d=" << d << ", p=" << p << "): " << e.what();
                throw std::invalid_argument(msg.str());
            }
        }
    }
    return reports;
}

}  // namespace superact

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

#include "superact/channels.hpp"

#include <algorithm>
#include <cmath>

namespace superact {

KrausChannel::KrausChannel(std::vector<CMat> ops) : kraus_ops(std::move(ops)) {
    if (kraus_ops.empty()) throw std::invalid_argument("channel needs at least one Kraus operator");
    out_dim = kraus_ops.front().rows();
    in_dim = kraus_ops.front().cols();
    CMat sum = CMat::Zero(in_dim, in_dim);
    for (const auto& k : kraus_ops) {
        if (k.rows() != out_dim || k.cols() != in_dim)
            throw std::invalid_argument("Kraus operators must share one shape");
        sum += k.adjoint() * k;
    }
    if ((sum - identity(in_dim)).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("Kraus operators are not trace preserving");
}

CMat KrausChannel::apply_direct(const CMat& rho) const {
    if (rho.rows() != in_dim || rho.cols() != in_dim)
        throw std::invalid_argument("channel input dimension mismatch");
    CMat out = CMat::Zero(out_dim, out_dim);
    for (const auto& k : kraus_ops) out += k * rho * k.adjoint();
    return out;
}

KrausChannel identity_channel(Eigen::Index d) {
    return KrausChannel({identity(d)});
}

KrausChannel erasure_channel(double p, Eigen::Index d) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erasure probability must be in [0,1]");
    if (d < 1) throw std::invalid_argument("erasure channel needs d >= 1");
    std::vector<CMat> ops;
    // Pass-through: embed C^d into the first d coordinates of C^{d+1}.
    CMat embed = CMat::Zero(d + 1, d);
    embed.topRows(d) = identity(d);
    ops.push_back(std::sqrt(1.0 - p) * embed);
    // Erasure: |e><i| for each input basis vector, |e> the last coordinate.
    for (Eigen::Index i = 0; i < d; ++i) {
        CMat k = CMat::Zero(d + 1, d);
        k(d, i) = std::sqrt(p);
        ops.push_back(std::move(k));
    }
    return KrausChannel(std::move(ops));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho,
                    const std::string& target) {
    const std::size_t pos = rho.layout.index_of(target);
    if (rho.layout[pos].dim != ch.in_dim)
        throw std::invalid_argument("target factor dimension does not match channel input");

    Eigen::Index before = 1, after = 1;
    for (std::size_t k = 0; k < rho.layout.size(); ++k) {
        if (k < pos) before *= rho.layout[k].dim;
        if (k > pos) after *= rho.layout[k].dim;
    }

    CMat out = CMat::Zero(before * ch.out_dim * after, before * ch.out_dim * after);
    for (const auto& k : ch.kraus_ops) {
        CMat lifted = kron(identity(before), kron(k, identity(after)));
        out += lifted * rho.matrix * lifted.adjoint();
    }
    return DensityMatrix(std::move(out), rho.layout.with_dim(target, ch.out_dim));
}

ChoiMatrix choi(const KrausChannel& ch) {
    const Eigen::Index d = ch.in_dim;
    // Columns of the unnormalized maximally entangled vector sum_i |ii>.
    CVec omega = CVec::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) omega(i * d + i) = 1.0;
    CMat omega_proj = omega * omega.adjoint();

    CMat out = CMat::Zero(ch.out_dim * d, ch.out_dim * d);
    for (const auto& k : ch.kraus_ops) {
        CMat lifted = kron(k, identity(d));
        out += lifted * omega_proj * lifted.adjoint();
    }
    return ChoiMatrix{std::move(out), SystemLayout{{"out", ch.out_dim}, {"in", d}},
                      d, ch.out_dim};
}

PptResult is_ppt(const DensityMatrix& rho, const std::vector<std::string>& split,
                 double tol) {
    if (split.empty() || split.size() >= rho.layout.size())
        throw std::invalid_argument("split must be a proper nonempty subset of the layout");
    CMat pt = partial_transpose(rho.matrix, rho.layout, split);
    auto evals = hermitian_eigenvalues(pt);
    return {evals.front() >= -tol, evals.front()};
}

double ppt_distinguishability_bound(const DensityMatrix& r0, const DensityMatrix& r1,
                                    const std::vector<std::string>& split) {
    if (!(r0.layout == r1.layout))
        throw std::invalid_argument("states must share one layout");
    CMat pt = partial_transpose(r0.matrix - r1.matrix, r0.layout, split);
    double bound = 0.5 + 0.25 * trace_norm(pt);
    return std::clamp(bound, 0.5, 1.0);
}

}  // namespace superact

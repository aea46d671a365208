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

#include "superact/states.hpp"

namespace superact {

/// Trace-preserving channel in Kraus form. Construction checks
/// sum_k K^dag K = I within 1e-10 and uniform operator shape.
struct KrausChannel {
    std::vector<CMat> kraus_ops;
    Eigen::Index in_dim;
    Eigen::Index out_dim;

    explicit KrausChannel(std::vector<CMat> ops);

    /// Apply to a bare density matrix of dimension in_dim.
    CMat apply_direct(const CMat& rho) const;
};

/// Choi matrix on layout [(out, out_dim), (in, in_dim)], trace = in_dim.
struct ChoiMatrix {
    CMat matrix;
    SystemLayout layout;
    Eigen::Index in_dim;
    Eigen::Index out_dim;
};

KrausChannel identity_channel(Eigen::Index d);

/// Erasure channel: with probability 1-p the input passes through (embedded
/// in the first d coordinates of C^{d+1}), otherwise the output is the flag
/// |e> on the last coordinate.
KrausChannel erasure_channel(double p, Eigen::Index d);

/// Apply a channel to one named factor of a multipartite state; the target
/// factor's dimension becomes ch.out_dim.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho,
                    const std::string& target);

/// (N (x) I) applied to the unnormalized maximally entangled state.
ChoiMatrix choi(const KrausChannel& ch);

struct PptResult {
    bool is_ppt;
    double min_eigenvalue;
};

/// Peres-Horodecki test: partial transpose across `split` and report the
/// minimum eigenvalue.
PptResult is_ppt(const DensityMatrix& rho, const std::vector<std::string>& split,
                 double tol = 1e-9);

/// PPT-measurement bound on the success probability of telling r0 from r1:
/// 1/2 + ||(r0 - r1)^Gamma||_1 / 4, clamped to [1/2, 1].
double ppt_distinguishability_bound(const DensityMatrix& r0, const DensityMatrix& r1,
                                    const std::vector<std::string>& split);

}  // namespace superact

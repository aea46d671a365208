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

#include "superact/capacity.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace superact {

namespace {

constexpr double kSpectrumCutoff = 1e-12;
constexpr double kNegativeMassLimit = 1e-8;

}  // namespace

double binary_entropy(double x) {
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

EntropyReport entropy_of_spectrum(const std::vector<double>& spectrum) {
    double entropy = 0.0;
    double clipped = 0.0;
    for (double lam : spectrum) {
        if (lam < 0.0) clipped -= lam;
        if (lam > kSpectrumCutoff) entropy -= lam * std::log2(lam);
    }
    if (clipped > kNegativeMassLimit)
        throw std::invalid_argument("spectrum has negative mass " + std::to_string(clipped));
    return {entropy, spectrum, clipped};
}

EntropyReport von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix));
}

CoherentInfoReport coherent_information_state(const DensityMatrix& rho,
                                              const std::vector<std::string>& b_labels) {
    if (b_labels.empty() || b_labels.size() >= rho.layout.size())
        throw std::invalid_argument("B must be a proper nonempty subset of the layout");
    auto [rb, rb_layout] = partial_trace(rho.matrix, rho.layout, b_labels);
    double s_b = entropy_of_spectrum(hermitian_eigenvalues(rb)).entropy_bits;
    double s_ab = von_neumann_entropy(rho).entropy_bits;
    return {s_b, s_ab, s_b - s_ab};
}

CoherentInfoReport channel_coherent_information(const KrausChannel& ch,
                                                const DensityMatrix& input) {
    if (input.dim() != ch.in_dim)
        throw std::invalid_argument("input dimension does not match channel");

    // Purify against a reference of dimension rank(input).
    auto [evals, evecs] = hermitian_eigensystem(input.matrix);
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        if (evals(i) > kSpectrumCutoff) support.push_back(i);
    const Eigen::Index rank = static_cast<Eigen::Index>(support.size());
    const Eigen::Index d = ch.in_dim;

    CVec purified = CVec::Zero(d * rank);
    for (Eigen::Index r = 0; r < rank; ++r) {
        const double w = std::sqrt(evals(support[r]));
        for (Eigen::Index s = 0; s < d; ++s)
            purified(s * rank + r) = w * evecs(s, support[r]);
    }
    purified.normalize();

    PureState phi(std::move(purified), SystemLayout{{"S", d}, {"R", rank}});
    DensityMatrix joint(phi.projector(), phi.layout);
    DensityMatrix out = apply(ch, joint, "S");

    auto [out_b, out_b_layout] = partial_trace(out.matrix, out.layout, {"S"});
    double s_b = entropy_of_spectrum(hermitian_eigenvalues(out_b)).entropy_bits;
    double s_ab = von_neumann_entropy(out).entropy_bits;
    return {s_b, s_ab, s_b - s_ab};
}

namespace {

CMat normalized_density(const CMat& a) {
    CMat rho = a * a.adjoint();
    const double tr = rho.trace().real();
    if (tr <= 0.0) throw std::runtime_error("degenerate search parameterization");
    return rho / tr;
}

double objective(const KrausChannel& ch, const CMat& a) {
    DensityMatrix rho(normalized_density(a), SystemLayout{{"S", ch.in_dim}});
    return channel_coherent_information(ch, rho).i_c;
}

}  // namespace

Q1Result q1_search(const KrausChannel& ch, int restarts, int max_iters,
                   std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("q1_search needs restarts >= 1");
    const Eigen::Index d = ch.in_dim;

    Q1Result result;
    result.best_ic = -std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < restarts; ++restart) {
        // Per-restart stream derived deterministically from (seed, restart).
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1));
        std::normal_distribution<double> gauss(0.0, 1.0);

        CMat a(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));

        double best = objective(ch, a);
        double step = 0.1;
        for (int iter = 0; iter < max_iters && step >= 1e-6; ++iter) {
            bool improved = false;
            for (Eigen::Index i = 0; i < d; ++i) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    for (Complex delta : {Complex(step, 0.0), Complex(-step, 0.0),
                                          Complex(0.0, step), Complex(0.0, -step)}) {
                        CMat trial = a;
                        trial(i, j) += delta;
                        const double val = objective(ch, trial);
                        if (val > best) {
                            best = val;
                            a = std::move(trial);
                            improved = true;
                        }
                    }
                }
            }
            if (!improved) step *= 0.5;
            result.iterate_trace.push_back(best);
        }

        if (best > result.best_ic) {
            result.best_ic = best;
            result.best_input = normalized_density(a);
        }
    }
    return result;
}

}  // namespace superact

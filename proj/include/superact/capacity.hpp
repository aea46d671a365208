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

#include <cstdint>

#include "superact/channels.hpp"

namespace superact {

/// Von Neumann entropy in bits, with the spectrum it was computed from.
struct EntropyReport {
    double entropy_bits;
    std::vector<double> spectrum;
    /// Total mass of negative eigenvalues clamped to zero; anything above
    /// 1e-8 means the input was not a valid state.
    double clipped_mass;
};

struct CoherentInfoReport {
    double s_b;
    double s_ab;
    double i_c;  // s_b - s_ab
};

/// -sum lambda log2 lambda over eigenvalues above the 1e-12 cutoff.
EntropyReport von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of an explicit spectrum (same cutoff rules).
EntropyReport entropy_of_spectrum(const std::vector<double>& spectrum);

/// I_c(A>B) = S(B) - S(AB); b_labels must be a proper nonempty subset of
/// the layout and the remaining factors constitute A.
CoherentInfoReport coherent_information_state(const DensityMatrix& rho,
                                              const std::vector<std::string>& b_labels);

/// Coherent information of one channel use: purify the input against a
/// reference of dimension rank(input), send the system through the channel,
/// and evaluate S(output) - S(joint).
CoherentInfoReport channel_coherent_information(const KrausChannel& ch,
                                                const DensityMatrix& input);

/// Outcome of the Q1 lower-bound search.
struct Q1Result {
    double best_ic;
    CMat best_input;                  // density matrix on the channel input
    std::vector<double> iterate_trace;  // best value after each search pass
};

/// Multi-start derivative-free maximization of channel coherent information
/// over inputs rho = A A^dag / Tr(A A^dag). Deterministic for a fixed seed;
/// the result is a lower bound on Q1, never a certified optimum.
Q1Result q1_search(const KrausChannel& ch, int restarts, int max_iters,
                   std::uint64_t seed);

/// Binary entropy H2(x) in bits.
double binary_entropy(double x);

}  // namespace superact

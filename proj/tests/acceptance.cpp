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

// End-to-end acceptance suite. Each numbered criterion prints one
// PASS/FAIL line; the process exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

#include "superact/protocol.hpp"
#include "test_util.hpp"

using namespace superact;
using namespace superact::testutil;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name
              << detail << "  [" << secs << " s]\n";
    if (!ok) ++g_failures;
}

double h2(double x) {
    double h = 0.0;
    if (x > 0.0 && x < 1.0) h = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    return h;
}

bool within(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    criterion(1, "superactivation headline: fidelity 3/4, I_c = 1 - H2(1/4), < 1 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        ProtocolReport rep = run_protocol(2, 0.5);
        return within(rep.fidelity_psi0, 0.75, 1e-10) &&
               within(rep.i_c, 1.0 - h2(0.25), 1e-9) && elapsed_s(t0) < 1.0;
    });

    criterion(2, "erasure side is useless: Q1 search <= 1e-6 and (1-2p)S(rho) law, < 30 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        Q1Result q1 = q1_search(erasure_channel(0.5, 2), 8, 200, 42);
        if (q1.best_ic > 1e-6) return false;
        std::mt19937_64 rng(101);
        for (int rep = 0; rep < 50; ++rep) {
            DensityMatrix rho(random_density(2, rng), SystemLayout{{"S", 2}});
            const double s = von_neumann_entropy(rho).entropy_bits;
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double ic = channel_coherent_information(erasure_channel(p, 2), rho).i_c;
                if (!within(ic, (1.0 - 2.0 * p) * s, 1e-8)) return false;
            }
        }
        return elapsed_s(t0) < 30.0;
    });

    criterion(3, "flag side hides: PPT bound = 1/2 + 1/d for d in {2,3,4}", [] {
        for (Eigen::Index d : {2, 3, 4}) {
            auto [tau0, tau1] = hiding_flags(d);
            const double bound = ppt_distinguishability_bound(tau0, tau1, {"B'"});
            if (!within(bound, 0.5 + 1.0 / static_cast<double>(d), 1e-9)) return false;
        }
        return true;
    });

    criterion(4, "flagged-Bell marginal is the classical state with zero I_c", [] {
        for (Eigen::Index d : {2, 3, 4}) {
            DensityMatrix rho = flagged_bell(d);
            auto [ab, lay] = partial_trace(rho.matrix, rho.layout, {"A", "B"});
            if (max_abs_diff(ab, classically_correlated().matrix) > 1e-12) return false;
            const double ic =
                coherent_information_state(DensityMatrix(ab, lay), {"B"}).i_c;
            if (std::abs(ic) > 1e-9) return false;
        }
        return true;
    });

    criterion(5, "two protocol pipelines agree entrywise over d x p grid, < 10 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        for (Eigen::Index d : {2, 3}) {
            for (double p : {0.0, 0.25, 0.5, 1.0}) {
                ProtocolReport fast = run_protocol(d, p);
                ProtocolReport full = run_protocol_full_simulation(d, p);
                if (max_abs_diff(fast.final_ab->matrix, full.final_ab->matrix) > 1e-9)
                    return false;
            }
        }
        return elapsed_s(t0) < 10.0;
    });

    criterion(6, "untwisting recovers psi0 x shield for 20 random unitaries", [] {
        std::mt19937_64 rng(102);
        SystemLayout shield_lay{{"A'", 2}, {"B'", 2}};
        DensityMatrix shield(random_density(4, rng), shield_lay);
        const CMat expected = kron(bell(0).projector(), shield.matrix);
        for (int rep = 0; rep < 20; ++rep) {
            const CMat v = random_unitary(4, rng);
            DensityMatrix recovered = untwist(twisted_private_state(shield, v), v);
            if (max_abs_diff(recovered.matrix, expected) > 1e-10) return false;
        }
        return true;
    });

    criterion(7, "NPT witness: Bell min PT eigenvalue -1/2; classical state is PPT", [] {
        DensityMatrix b0(bell(0).projector(), bell(0).layout);
        PptResult bell_res = is_ppt(b0, {"B"});
        PptResult cc_res = is_ppt(classically_correlated(), {"B"});
        return !bell_res.is_ppt && within(bell_res.min_eigenvalue, -0.5, 1e-10) &&
               cc_res.is_ppt;
    });

    criterion(8, "property suites over >= 20 randomized instances each", [] {
        std::mt19937_64 rng(103);

        // Entropy unitary invariance and additivity.
        for (int rep = 0; rep < 20; ++rep) {
            CMat rho = random_density(4, rng);
            CMat u = random_unitary(4, rng);
            SystemLayout lay{{"A", 4}};
            const double s = entropy_of_spectrum(hermitian_eigenvalues(rho)).entropy_bits;
            const double s_rot =
                entropy_of_spectrum(hermitian_eigenvalues(u * rho * u.adjoint())).entropy_bits;
            if (std::abs(s - s_rot) > 1e-8) return false;
            CMat sigma = random_density(3, rng);
            const double s_sigma =
                entropy_of_spectrum(hermitian_eigenvalues(sigma)).entropy_bits;
            const double s_joint =
                entropy_of_spectrum(hermitian_eigenvalues(kron(rho, sigma))).entropy_bits;
            if (std::abs(s_joint - (s + s_sigma)) > 1e-8) return false;
        }

        // Partial-trace composition.
        SystemLayout abc{{"A", 2}, {"B", 3}, {"C", 2}};
        for (int rep = 0; rep < 20; ++rep) {
            CMat m = random_density(12, rng);
            auto [step1, lay1] = partial_trace(m, abc, {"A", "C"});
            auto [two_step, lay2] = partial_trace(step1, lay1, {"A"});
            auto [one_step, lay3] = partial_trace(m, abc, {"A"});
            if (max_abs_diff(two_step, one_step) > 1e-12) return false;
        }

        // Channel trace preservation.
        SystemLayout ab{{"A", 2}, {"B", 2}};
        for (int rep = 0; rep < 20; ++rep) {
            DensityMatrix rho(random_density(4, rng), ab);
            const double p = (rep % 5) / 4.0;
            DensityMatrix out = apply(erasure_channel(p, 2), rho, "A");
            if (std::abs(out.matrix.trace().real() - 1.0) > 1e-10) return false;
        }

        // Determinism under seed.
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 6ULL, 7ULL, 8ULL, 9ULL,
                                   10ULL, 11ULL, 12ULL, 13ULL, 14ULL, 15ULL, 16ULL, 17ULL,
                                   18ULL, 19ULL, 20ULL}) {
            Q1Result a = q1_search(erasure_channel(0.25, 2), 1, 10, seed);
            Q1Result b = q1_search(erasure_channel(0.25, 2), 1, 10, seed);
            if (a.iterate_trace != b.iterate_trace || a.best_ic != b.best_ic) return false;
        }
        return true;
    });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}

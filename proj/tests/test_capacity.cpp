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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superact/capacity.hpp"
#include "test_util.hpp"

using namespace superact;
using namespace superact::testutil;

namespace {

// Independent oracle: H2 written out directly.
double h2(double x) {
    double h = 0.0;
    if (x > 0.0 && x < 1.0) h = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    return h;
}

DensityMatrix qubit_density(const CMat& m) {
    return DensityMatrix(m, SystemLayout{{"S", m.rows()}});
}

}  // namespace

TEST_CASE("von Neumann entropy basics") {
    SystemLayout one{{"A", 2}};
    CHECK(von_neumann_entropy(qubit_density(0.5 * identity(2))).entropy_bits ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(DensityMatrix(bell(0).projector(), bell(0).layout))
              .entropy_bits == doctest::Approx(0.0).epsilon(1e-10));

    CMat mix = 0.75 * bell(0).projector() + 0.25 * bell(1).projector();
    CHECK(von_neumann_entropy(DensityMatrix(mix, bell(0).layout)).entropy_bits ==
          doctest::Approx(h2(0.25)).epsilon(1e-12));
}

TEST_CASE("entropy is unitarily invariant and additive") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        CMat rho = random_density(4, rng);
        CMat u = random_unitary(4, rng);
        SystemLayout lay{{"A", 4}};
        double s = von_neumann_entropy(DensityMatrix(rho, lay)).entropy_bits;
        double s_rot =
            von_neumann_entropy(DensityMatrix(u * rho * u.adjoint(), lay)).entropy_bits;
        CHECK(std::abs(s - s_rot) < 1e-8);

        CMat sigma = random_density(3, rng);
        double s_sigma =
            von_neumann_entropy(DensityMatrix(sigma, SystemLayout{{"B", 3}})).entropy_bits;
        double s_joint = von_neumann_entropy(DensityMatrix(
                             kron(rho, sigma), SystemLayout{{"A", 4}, {"B", 3}}))
                             .entropy_bits;
        CHECK(std::abs(s_joint - (s + s_sigma)) < 1e-8);
    }
}

TEST_CASE("coherent information of states") {
    DensityMatrix b0(bell(0).projector(), bell(0).layout);
    auto rep = coherent_information_state(b0, {"B"});
    CHECK(rep.s_b == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.s_ab == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(rep.i_c == doctest::Approx(1.0).epsilon(1e-10));

    auto cc = coherent_information_state(classically_correlated(), {"B"});
    CHECK(cc.i_c == doctest::Approx(0.0).epsilon(1e-10));

    CMat mix = 0.75 * bell(0).projector() + 0.25 * bell(1).projector();
    auto mx = coherent_information_state(DensityMatrix(mix, bell(0).layout), {"B"});
    CHECK(mx.i_c == doctest::Approx(1.0 - h2(0.25)).epsilon(1e-10));

    CHECK_THROWS_AS(coherent_information_state(b0, {}), std::invalid_argument);
    CHECK_THROWS_AS(coherent_information_state(b0, {"A", "B"}), std::invalid_argument);
}

TEST_CASE("coherent information respects the dimension bound") {
    std::mt19937_64 rng(42);
    SystemLayout lay{{"A", 2}, {"B", 3}};
    for (int rep = 0; rep < 20; ++rep) {
        DensityMatrix rho(random_density(6, rng), lay);
        auto r = coherent_information_state(rho, {"B"});
        CHECK(std::abs(r.i_c) <= 1.0 + 1e-9);  // log2 dim(A) = 1
    }
}

TEST_CASE("channel coherent information") {
    SUBCASE("identity channel on a pure input is 0") {
        CMat pure = CMat::Zero(2, 2);
        pure(0, 0) = 1.0;
        CHECK(channel_coherent_information(identity_channel(2), qubit_density(pure)).i_c ==
              doctest::Approx(0.0).epsilon(1e-10));
    }

    SUBCASE("erasure on the maximally mixed input") {
        CHECK(channel_coherent_information(erasure_channel(0.5, 2),
                                           qubit_density(0.5 * identity(2)))
                  .i_c == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(channel_coherent_information(erasure_channel(0.25, 2),
                                           qubit_density(0.5 * identity(2)))
                  .i_c == doctest::Approx(0.5).epsilon(1e-10));
    }

    SUBCASE("matches (1-2p) S(rho) on random inputs") {
        std::mt19937_64 rng(43);
        for (int rep = 0; rep < 50; ++rep) {
            DensityMatrix rho = qubit_density(random_density(2, rng));
            double s = von_neumann_entropy(rho).entropy_bits;
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                double ic = channel_coherent_information(erasure_channel(p, 2), rho).i_c;
                CHECK(std::abs(ic - (1.0 - 2.0 * p) * s) < 1e-8);
            }
        }
    }

    SUBCASE("dimension mismatch errors") {
        CHECK_THROWS_AS(channel_coherent_information(erasure_channel(0.5, 3),
                                                     qubit_density(0.5 * identity(2))),
                        std::invalid_argument);
    }
}

TEST_CASE("q1 search") {
    SUBCASE("identity channel reaches one bit") {
        Q1Result res = q1_search(identity_channel(2), 4, 200, 42);
        CHECK(res.best_ic == doctest::Approx(1.0).epsilon(1e-4));
        // Optimum sits at the maximally mixed input.
        CHECK(max_abs_diff(res.best_input, 0.5 * identity(2)) < 0.05);
    }

    SUBCASE("p = 1/2 erasure is useless") {
        Q1Result res = q1_search(erasure_channel(0.5, 2), 8, 100, 42);
        CHECK(res.best_ic <= 1e-6);
    }

    SUBCASE("p = 1/4 erasure reaches half a bit") {
        Q1Result res = q1_search(erasure_channel(0.25, 2), 4, 200, 42);
        CHECK(res.best_ic == doctest::Approx(0.5).epsilon(1e-3));
    }

    SUBCASE("identical seeds give bit-identical traces") {
        Q1Result a = q1_search(erasure_channel(0.25, 2), 3, 40, 7);
        Q1Result b = q1_search(erasure_channel(0.25, 2), 3, 40, 7);
        REQUIRE(a.iterate_trace.size() == b.iterate_trace.size());
        for (std::size_t i = 0; i < a.iterate_trace.size(); ++i)
            CHECK(a.iterate_trace[i] == b.iterate_trace[i]);
        CHECK(a.best_ic == b.best_ic);
    }

    CHECK_THROWS_AS(q1_search(identity_channel(2), 0, 10, 1), std::invalid_argument);
}

// Copyright 2026 The infogeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "infogeo/distmax.hpp"

namespace infogeo {
namespace {

ComplexState random_state(std::size_t n, std::uint64_t seed) { return to_complex(random_real_state(2 * n, seed)); }

TEST(HilbertDistance, KnownValues) {
    const ComplexState e0 = ComplexState::basis(2, 0), e1 = ComplexState::basis(2, 1);
    EXPECT_NEAR(hilbert_distance(e0, e1), std::numbers::pi / 2, 1e-15);
    EXPECT_EQ(hilbert_distance(e0, e0), 0.0);
    EXPECT_EQ(hilbert_distance(e0, e0.with_global_phase(1.3)), 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(hilbert_distance(e0, ComplexState({Complex(r, 0), Complex(0, r)})), std::numbers::pi / 4, 1e-15);
}

TEST(HilbertDistance, AccurateForNearbyStates) {
    const double t = 1e-9;
    const ComplexState a = ComplexState::basis(2, 0);
    const ComplexState b({Complex(std::cos(t), 0), Complex(std::sin(t), 0)});
    EXPECT_NEAR(hilbert_distance(a, b), t, 1e-20);
}

TEST(Givens, UnitaryForAnyParameters) {
    EXPECT_EQ(givens_parameter_count(3), 9u);
    std::vector<double> params(9);
    for (std::size_t i = 0; i < params.size(); ++i) params[i] = 0.3 * static_cast<double>(i) - 1.0;
    const UnitaryMap u = givens_unitary(3, params);
    EXPECT_LT((u.matrix().adjoint() * u.matrix() - ComplexMatrix::Identity(3, 3)).norm(), 1e-13);
    const std::vector<double> zeros(4, 0.0);
    EXPECT_LT((givens_unitary(2, zeros).matrix() - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(Distinguishability, EnvelopeOverRandomMeasurements) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const ComplexState u = random_state(3, s), v = random_state(3, 1000 + s);
        const Measurement m(random_unitary(3, 2000 + s));
        EXPECT_LE(measured_distance(m, u, v), hilbert_distance(u, v) + 1e-9);
    }
}

TEST(Distinguishability, OptimizerReachesHilbertDistance) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const ComplexState u = random_state(2, s), v = random_state(2, 50 + s);
        const DistinguishabilityResult r = maximize_statistical_distance(u, v, 8, s);
        EXPECT_LT(r.gap, 1e-3);
        EXPECT_LE(r.max_ds, r.hilbert_distance + 1e-9);
        EXPECT_NEAR(measured_distance(r.argmax_measurement, u, v), r.max_ds, 1e-12);
        EXPECT_GT(r.evaluations, 0u);
    }
}

TEST(Distinguishability, DeterministicForSeed) {
    const ComplexState u = random_state(3, 1), v = random_state(3, 2);
    const auto a = maximize_statistical_distance(u, v, 3, 5);
    const auto b = maximize_statistical_distance(u, v, 3, 5);
    EXPECT_EQ(a.max_ds, b.max_ds);
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Distinguishability, CertifiedEnvelopeBelowOptimum) {
    const ComplexState u = random_state(2, 7), v = random_state(2, 8);
    const double cert = certify_upper_bound(u, v, 100, 3);
    const auto r = maximize_statistical_distance(u, v, 8, 3);
    EXPECT_LE(cert, r.max_ds + 1e-9);
    EXPECT_LE(cert, hilbert_distance(u, v) + 1e-9);
}

TEST(Distinguishability, OrthogonalAndIdenticalPairs) {
    const ComplexState e0 = ComplexState::basis(3, 0), e2 = ComplexState::basis(3, 2);
    EXPECT_NEAR(maximize_statistical_distance(e0, e2, 4, 1).max_ds, std::numbers::pi / 2, 1e-6);
    EXPECT_LT(maximize_statistical_distance(e0, e0, 1, 1).max_ds, 1e-12);
}

}  // namespace
}  // namespace infogeo

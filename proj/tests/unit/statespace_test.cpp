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

#include "infogeo/error.hpp"
#include "infogeo/rng.hpp"
#include "infogeo/statespace.hpp"
#include "infogeo/transforms.hpp"

namespace infogeo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PolarState random_polar(std::size_t n, Rng &rng) {
    std::vector<double> w(n), th(n);
    for (double &x : w) x = 0.05 + rng.uniform();
    for (double &t : th) t = rng.uniform(0.0, kTwoPi);
    return PolarState(ProbDist::renormalized(w), th);
}

TEST(CoarseGrain, SumsAdjacentPairs) {
    const ProbDist p = coarse_grain(EventDist({0.1, 0.2, 0.3, 0.4}));
    EXPECT_NEAR(p[0], 0.3, 1e-16);
    EXPECT_NEAR(p[1], 0.7, 1e-16);
    try {
        (void)coarse_grain(EventDist({0.2, 0.3, 0.5}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OddDimension);
    }
}

TEST(RealState, Validation) {
    EXPECT_THROW(RealState({1.0, 0.0, 0.0}), Error);
    EXPECT_THROW(RealState({1.0, 1.0}), Error);
    const RealState q = RealState::normalized({3.0, 4.0});
    EXPECT_NEAR(q[0], 0.6, 1e-16);
    EXPECT_EQ(q.outcomes(), 1u);
}

TEST(Polar, RoundTrip) {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const PolarState ps = random_polar(4, rng);
        const PolarState back = to_polar(from_polar(ps));
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_NEAR(back.probs()[i], ps.probs()[i], 1e-14);
            const double d = std::abs(back.theta()[i] - ps.theta()[i]);
            EXPECT_LT(std::min(d, kTwoPi - d), 1e-12);
        }
    }
}

TEST(Polar, ZeroMassGetsZeroPhase) {
    const PolarState ps = to_polar(RealState({0.0, 0.0, 0.0, 1.0}));
    EXPECT_EQ(ps.theta()[0], 0.0);
    EXPECT_NEAR(ps.theta()[1], std::numbers::pi / 2, 1e-15);
}

TEST(Polar, ComponentsMatchDefinition) {
    const PolarState ps(ProbDist({0.25, 0.75}), {std::numbers::pi / 3, 1.0});
    const RealState q = from_polar(ps);
    EXPECT_NEAR(q[0], 0.5 * std::cos(std::numbers::pi / 3), 1e-16);
    EXPECT_NEAR(q[1], 0.5 * std::sin(std::numbers::pi / 3), 1e-16);
    EXPECT_NEAR(q[2], std::sqrt(0.75) * std::cos(1.0), 4e-16);
    EXPECT_NEAR(q[3], std::sqrt(0.75) * std::sin(1.0), 4e-16);
}

TEST(Complex, PairsBecomeComplexEntries) {
    const RealState q({0.6, 0.0, 0.0, 0.8});
    const ComplexState v = to_complex(q);
    EXPECT_EQ(v[0], Complex(0.6, 0.0));
    EXPECT_EQ(v[1], Complex(0.0, 0.8));
    EXPECT_EQ(from_complex(v), q);
    const ProbDist p = born_probs(v);
    EXPECT_NEAR(p[0], 0.36, 1e-16);
}

TEST(Complex, BornProbsMatchCoarseGrainedEvents) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const RealState q = random_real_state(6, s);
        const ProbDist a = born_probs(to_complex(q));
        const ProbDist b = coarse_grain(state_event_probs(q));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
    }
}

TEST(Gauge, ShiftMovesAllPhasesTogether) {
    const PolarState ps(ProbDist({0.5, 0.5}), {0.1, 0.2});
    const PolarState moved = gauge_shift(ps, 0.5, GaugeConvention(2.0, 1.0));
    EXPECT_NEAR(moved.theta()[0], 1.1, 1e-15);
    EXPECT_NEAR(moved.theta()[1], 1.2, 1e-15);
    EXPECT_THROW(GaugeConvention(0.0, 1.0), Error);
}

TEST(Gauge, ShiftLeavesBornProbsUnchanged) {
    Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        const PolarState ps = random_polar(3, rng);
        const ProbDist a = born_probs(to_complex(from_polar(ps)));
        const ProbDist b = born_probs(to_complex(from_polar(gauge_shift(ps, rng.uniform(-9.0, 9.0)))));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
    }
}

TEST(Metric, PolarFormMatchesEmbedding) {
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
        const PolarState ps = random_polar(3, rng);
        std::vector<double> d{rng.normal(), rng.normal(), 0.0};
        d[2] = -d[0] - d[1];
        for (double &x : d) x *= 1e-3;
        const TangentVec dp(d);
        const std::vector<double> dth{rng.normal(), rng.normal(), rng.normal()};
        const std::vector<double> dchi{rng.normal(), rng.normal(), rng.normal()};
        const GaugeConvention g(1.5, 0.3);
        std::vector<double> total(3);
        for (std::size_t i = 0; i < 3; ++i) total[i] = dth[i] + 1.5 * dchi[i];
        const auto push = polar_pushforward(ps, dp, total);
        double sq = 0.0;
        for (double x : push) sq += x * x;
        const double quad = polar_metric_quadratic(ps, dp, dth, g, dchi);
        EXPECT_NEAR(quad, sq, 1e-12 * sq);
        // Independent oracle: 1/4 sum dp^2/p + sum p dtheta^2.
        double oracle = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            oracle += 0.25 * d[i] * d[i] / ps.probs()[i] + ps.probs()[i] * total[i] * total[i];
        }
        EXPECT_NEAR(quad, oracle, 1e-12 * oracle);
    }
}

TEST(Metric, EventTangentPullback) {
    const RealState q = RealState::normalized({0.5, -0.5, 0.5, 0.5});
    const std::vector<double> dP{0.01, -0.02, 0.005, 0.005};
    const auto dQ = event_tangent_to_state(q, dP);
    double sq = 0.0, fisher = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        sq += dQ[i] * dQ[i];
        fisher += 0.25 * dP[i] * dP[i] / (q[i] * q[i]);
        EXPECT_NEAR(2.0 * q[i] * dQ[i], dP[i], 1e-16);
    }
    EXPECT_NEAR(sq, fisher, 1e-16);
}

TEST(Measure, AffineIsFlatQuadraticIsNot) {
    const auto flat = sample_theta_prime([](double x) { return 3.0 * x + 2.0; }, 0.0, kTwoPi, 51);
    const MeasureCheck a = measure_invariance_check(flat);
    EXPECT_TRUE(a.passed);
    EXPECT_NEAR(a.mean, 3.0, 1e-9);
    const auto quad = sample_theta_prime([](double x) { return x * x; }, 0.0, 1.0, 51);
    const MeasureCheck b = measure_invariance_check(quad);
    EXPECT_FALSE(b.passed);
    EXPECT_NEAR(b.deviation, 2.0, 1e-9);
    const std::vector<double> one{1.0};
    EXPECT_THROW((void)measure_invariance_check(one), Error);
    EXPECT_NEAR(affine_measure_density(GaugeConvention(2.0, 1.0), 0.7), 1.0 / kTwoPi, 1e-16);
}

TEST(WrapAngle, Range) {
    EXPECT_NEAR(wrap_angle(-0.5), kTwoPi - 0.5, 1e-15);
    EXPECT_NEAR(wrap_angle(7.0), 7.0 - kTwoPi, 1e-15);
    EXPECT_GE(wrap_angle(-1e-18), 0.0);
    EXPECT_LT(wrap_angle(-1e-18), kTwoPi);
}

}  // namespace
}  // namespace infogeo

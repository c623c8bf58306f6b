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

#include "infogeo/bayes.hpp"
#include "infogeo/error.hpp"
#include "infogeo/experiments.hpp"

namespace infogeo {
namespace {

double shannon_bits_free(double a, double b) {
    double h = 0.0;
    if (a > 0) h -= a * std::log(a);
    if (b > 0) h -= b * std::log(b);
    return h;
}

// Direct evaluation: P_A / P_B = exp(2x), gain = H(1/2,1/2) - H(P_A, P_B).
double gain_oracle(double x) {
    const double pa = 1.0 / (1.0 + std::exp(-2.0 * x));
    return std::log(2.0) - shannon_bits_free(pa, 1.0 - pa);
}

CoinExperiment coin(double delta, std::uint64_t n) {
    return CoinExperiment(ProbDist({0.5, 0.5}), ProbDist({0.5 + delta, 0.5 - delta}), n);
}

TEST(Posterior, Logistic) {
    const PosteriorReport r = posterior_from_log_ratio(0.0);
    EXPECT_DOUBLE_EQ(r.post_a, 0.5);
    const PosteriorReport big = posterior_from_log_ratio(800.0);
    EXPECT_EQ(big.post_a, 1.0);
    EXPECT_EQ(big.post_b, std::exp(-800.0));
    const PosteriorReport neg = posterior_from_log_ratio(-3.0);
    EXPECT_NEAR(neg.post_a, 1.0 / (1.0 + std::exp(3.0)), 1e-16);
    EXPECT_NEAR(neg.post_a + neg.post_b, 1.0, 4e-16);
}

TEST(Posterior, ExactFromCounts) {
    const CoinExperiment exp(ProbDist({0.5, 0.5}), ProbDist({0.8, 0.2}), 3);
    const std::vector<std::uint64_t> counts{2, 1};
    const double la = 0.125, lb = 0.8 * 0.8 * 0.2;
    EXPECT_NEAR(exact_posterior(exp, counts).post_a, la / (la + lb), 1e-15);
    const std::vector<std::uint64_t> bad{1, 1};
    EXPECT_THROW((void)exact_posterior(exp, bad), Error);
}

TEST(Posterior, PriorShiftsOdds) {
    const CoinExperiment exp(ProbDist({0.5, 0.5}), ProbDist({0.8, 0.2}), 1, 0.25);
    const std::vector<std::uint64_t> counts{0, 1};
    const double la = 0.25 * 0.5, lb = 0.75 * 0.2;
    EXPECT_NEAR(exact_posterior(exp, counts).post_a, la / (la + lb), 1e-15);
    EXPECT_THROW(CoinExperiment(ProbDist({0.5, 0.5}), ProbDist({0.5, 0.5}), 1, 1.0), Error);
}

TEST(Posterior, ZeroLikelihoodUnderBoth) {
    const std::vector<double> counts{1.0, 1.0};
    try {
        (void)log_likelihood_ratio(ProbDist({1.0, 0.0}), ProbDist({1.0, 0.0}), counts);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroLikelihoodBoth);
    }
    EXPECT_EQ(log_likelihood_ratio(ProbDist({0.5, 0.5}), ProbDist({1.0, 0.0}), counts),
              std::numeric_limits<double>::infinity());
}

TEST(LogRatio, ExpectationAndExpansion) {
    const CoinExperiment exp = coin(0.01, 1000);
    const double kl = 0.5 * std::log(0.5 / 0.51) + 0.5 * std::log(0.5 / 0.49);
    EXPECT_NEAR(expected_log_ratio(exp), 1000 * kl, 1e-12);
    EXPECT_NEAR(expansion_log_ratio(exp), 2.0 * 1000 * 1e-4, 1e-15);
}

TEST(InfoGain, WorkedPoint) {
    EXPECT_NEAR(info_gain_at(0.1), gain_oracle(0.1), 1e-15);
    EXPECT_NEAR(info_gain_at(0.1), 0.0049751, 5e-8);
    // delta = 0.005: ds^2 = 2.5e-5, n = 4000 gives n ds^2 = 0.1.
    const CoinExperiment exp = coin(0.005, 4000);
    EXPECT_NEAR(info_gain_exact(exp), gain_oracle(0.1), 1e-12);
    EXPECT_NEAR(info_gain_approx(exp), 0.005, 1e-14);
}

TEST(InfoGain, RatioTendsToOne) {
    for (auto [x, tol] : {std::pair{0.05, 0.05}, {0.02, 0.02}, {0.01, 0.01}}) {
        const double ratio = info_gain_at(x) / (0.5 * x * x);
        EXPECT_NEAR(ratio, gain_oracle(x) / (0.5 * x * x), 1e-9);
        EXPECT_LT(std::abs(ratio - 1.0), tol);
    }
    EXPECT_NEAR(info_gain_at(0.05) / (0.5 * 0.05 * 0.05), 0.99875, 5e-5);
}

TEST(InfoGain, IdenticalCoinsGainNothing) {
    const CoinExperiment exp(ProbDist({0.3, 0.7}), ProbDist({0.3, 0.7}), 100);
    EXPECT_EQ(info_gain_exact(exp), 0.0);
    EXPECT_EQ(info_gain_approx(exp), 0.0);
    const MonteCarloSummary mc = monte_carlo_gain(exp, 100, 1);
    EXPECT_EQ(mc.mean_gain, 0.0);
}

TEST(InfoGain, CollisionEntropyVariant) {
    const EntropyFn c = EntropyFn::collision();
    EXPECT_NEAR(c(0.5, 0.5), std::log(2.0), 1e-15);
    EXPECT_GT(info_gain_at(0.3, c), 0.0);
}

TEST(MonteCarlo, DeterministicForSeed) {
    const CoinExperiment exp = coin(0.005, 400);
    const MonteCarloSummary a = monte_carlo_gain(exp, 500, 42);
    const MonteCarloSummary b = monte_carlo_gain(exp, 500, 42);
    EXPECT_EQ(a.mean_gain, b.mean_gain);
    EXPECT_EQ(a.std_error, b.std_error);
    const MonteCarloSummary c = monte_carlo_gain(exp, 500, 43);
    EXPECT_NE(a.mean_gain, c.mean_gain);
}

TEST(MonteCarlo, RelabelingOutcomesLeavesResultUnchanged) {
    const CoinExperiment exp(ProbDist({0.2, 0.3, 0.5}), ProbDist({0.25, 0.3, 0.45}), 200);
    const CoinExperiment perm(ProbDist({0.5, 0.2, 0.3}), ProbDist({0.45, 0.25, 0.3}), 200);
    EXPECT_EQ(monte_carlo_gain(exp, 300, 9).mean_gain, monte_carlo_gain(perm, 300, 9).mean_gain);
}

TEST(MonteCarlo, MatchesExactEnumeration) {
    const CoinExperiment exp = coin(0.05, 50);
    const MonteCarloSummary mc = monte_carlo_gain(exp, 20000, 3);
    const auto expected = expected_gain_by_enumeration(exp);
    ASSERT_TRUE(expected);
    EXPECT_LT(std::abs(mc.mean_gain - *expected), 4.0 * mc.std_error);
}

TEST(Enumeration, MatchesBruteForceBinomialSum) {
    const CoinExperiment exp(ProbDist({0.4, 0.6}), ProbDist({0.7, 0.3}), 12);
    double brute = 0.0;
    for (int k = 0; k <= 12; ++k) {
        const double pmf = std::exp(std::lgamma(13.0) - std::lgamma(k + 1.0) - std::lgamma(13.0 - k) +
                                    k * std::log(0.4) + (12 - k) * std::log(0.6));
        const double la = k * std::log(0.4) + (12 - k) * std::log(0.6);
        const double lb = k * std::log(0.7) + (12 - k) * std::log(0.3);
        const double pa = 1.0 / (1.0 + std::exp(lb - la));
        brute += pmf * (std::log(2.0) - shannon_bits_free(pa, 1.0 - pa));
    }
    const auto e = expected_gain_by_enumeration(exp);
    ASSERT_TRUE(e);
    EXPECT_NEAR(*e, brute, 1e-14);
    EXPECT_FALSE(expected_gain_by_enumeration(
        CoinExperiment(ProbDist({0.1, 0.2, 0.3, 0.4}), ProbDist({0.4, 0.3, 0.2, 0.1}), 100000)));
}

}  // namespace
}  // namespace infogeo

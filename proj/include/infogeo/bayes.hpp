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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "infogeo/simplex.hpp"

namespace infogeo {

/// Two coins (A with distribution `p`, B with `p2`), `tosses` draws from the
/// chosen coin, and a prior probability that A was chosen.
struct CoinExperiment {
    ProbDist p;
    ProbDist p2;
    std::uint64_t tosses = 1;
    double prior_a = 0.5;

    CoinExperiment(ProbDist p, ProbDist p2, std::uint64_t tosses, double prior_a = 0.5);
};

struct PosteriorReport {
    double post_a = 0.5;
    double post_b = 0.5;
    double log_ratio = 0.0;  // ln(post_a / post_b), nats
};

/// Uncertainty function on a binary distribution (pi, 1 - pi).
struct EntropyFn {
    std::string name;
    std::function<double(double, double)> fn;

    double operator()(double a, double b) const { return fn(a, b); }

    static EntropyFn shannon();
    /// Renyi entropy of order 2, -ln(a^2 + b^2).
    static EntropyFn collision();
};

PosteriorReport posterior_from_log_ratio(double log_ratio);

/// Exact Bayes update for observed integer counts (must sum to `tosses`).
PosteriorReport exact_posterior(const CoinExperiment &exp, std::span<const std::uint64_t> counts);

/// ln of the likelihood ratio prod (p_i/p2_i)^{c_i} for real-valued counts.
double log_likelihood_ratio(const ProbDist &p, const ProbDist &p2, std::span<const double> counts);

/// n * KL(p || p2): the exponent of the typical-data posterior ratio.
double expected_log_ratio(const CoinExperiment &exp);

/// 2 n ds^2 with dp = p2 - p: the second-order expansion of the exponent.
double expansion_log_ratio(const CoinExperiment &exp);

/// U(1/2,1/2) - U(P_A, P_B) where P_A/P_B = exp(2 x), x = n ds^2.
double info_gain_at(double n_ds2, const EntropyFn &u = EntropyFn::shannon());

double info_gain_exact(const CoinExperiment &exp, const EntropyFn &u = EntropyFn::shannon());

/// 1/2 (n ds^2)^2, the small-signal Shannon gain.
double info_gain_approx(const CoinExperiment &exp);

struct MonteCarloSummary {
    double mean_gain = 0.0;       // mean over trials of U(1/2,1/2) - U(posterior)
    double std_error = 0.0;       // standard error of mean_gain
    double mean_post_a = 0.5;     // mean posterior probability of coin A
    double post_a_std_error = 0.0;
    std::uint64_t trials = 0;
};

/// Simulates `trials` datasets of `tosses` draws from coin A. Trial t draws
/// from substream t of `seed`, so the result is independent of evaluation order.
MonteCarloSummary monte_carlo_gain(const CoinExperiment &exp, std::uint64_t trials,
                                   std::uint64_t seed,
                                   const EntropyFn &u = EntropyFn::shannon());

}  // namespace infogeo

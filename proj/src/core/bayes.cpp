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

#include "infogeo/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "infogeo/error.hpp"
#include "infogeo/rng.hpp"

namespace infogeo {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Log-likelihood of counts under q; -inf when a positive count meets q_i = 0.
double log_likelihood(const ProbDist &q, std::span<const double> counts) {
    double ll = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (counts[i] == 0.0) continue;
        if (q[i] == 0.0) return -std::numeric_limits<double>::infinity();
        ll += counts[i] * std::log(q[i]);
    }
    return ll;
}

}  // namespace

CoinExperiment::CoinExperiment(ProbDist p_, ProbDist p2_, std::uint64_t tosses_, double prior_a_)
    : p(std::move(p_)), p2(std::move(p2_)), tosses(tosses_), prior_a(prior_a_) {
    if (p.size() != p2.size()) {
        throw Error(ErrorCode::DimensionMismatch, "coins must have the same number of outcomes");
    }
    if (!(prior_a > 0.0 && prior_a < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "prior must lie in (0, 1)");
    }
}

EntropyFn EntropyFn::shannon() {
    return {"shannon", [](double a, double b) { return -(xlogx(a) + xlogx(b)); }};
}

EntropyFn EntropyFn::collision() {
    return {"collision", [](double a, double b) { return -std::log(a * a + b * b); }};
}

PosteriorReport posterior_from_log_ratio(double log_ratio) {
    PosteriorReport r;
    r.log_ratio = log_ratio;
    if (log_ratio >= 0.0) {
        const double e = std::exp(-log_ratio);
        r.post_a = 1.0 / (1.0 + e);
        r.post_b = e / (1.0 + e);
    } else {
        const double e = std::exp(log_ratio);
        r.post_a = e / (1.0 + e);
        r.post_b = 1.0 / (1.0 + e);
    }
    return r;
}

double log_likelihood_ratio(const ProbDist &p, const ProbDist &p2, std::span<const double> counts) {
    if (counts.size() != p.size() || p.size() != p2.size()) {
        throw Error(ErrorCode::DimensionMismatch, "counts and distributions differ in size");
    }
    const double la = log_likelihood(p, counts);
    const double lb = log_likelihood(p2, counts);
    if (std::isinf(la) && std::isinf(lb)) {
        throw Error(ErrorCode::ZeroLikelihoodBoth, "both coins assign zero probability to the data");
    }
    if (std::isinf(la)) return -std::numeric_limits<double>::infinity();
    if (std::isinf(lb)) return std::numeric_limits<double>::infinity();
    // Summed termwise so equal p_i/p2_i terms cancel exactly.
    double lr = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (counts[i] == 0.0) continue;
        lr += counts[i] * (std::log(p[i]) - std::log(p2[i]));
    }
    return lr;
}

PosteriorReport exact_posterior(const CoinExperiment &exp, std::span<const std::uint64_t> counts) {
    if (counts.size() != exp.p.size()) {
        throw Error(ErrorCode::DimensionMismatch, "one count per outcome is required");
    }
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total != exp.tosses) {
        throw Error(ErrorCode::InvalidArgument, "counts must sum to the number of tosses");
    }
    std::vector<double> c(counts.begin(), counts.end());
    const double prior_log = std::log(exp.prior_a) - std::log1p(-exp.prior_a);
    return posterior_from_log_ratio(prior_log + log_likelihood_ratio(exp.p, exp.p2, c));
}

double expected_log_ratio(const CoinExperiment &exp) {
    return static_cast<double>(exp.tosses) * kl_divergence(exp.p, exp.p2);
}

double expansion_log_ratio(const CoinExperiment &exp) {
    return 2.0 * static_cast<double>(exp.tosses) *
           fisher_quadratic(exp.p, TangentVec::between(exp.p, exp.p2));
}

double info_gain_at(double n_ds2, const EntropyFn &u) {
    const PosteriorReport post = posterior_from_log_ratio(2.0 * n_ds2);
    return std::max(0.0, u(0.5, 0.5) - u(post.post_a, post.post_b));
}

double info_gain_exact(const CoinExperiment &exp, const EntropyFn &u) {
    return info_gain_at(0.5 * expansion_log_ratio(exp), u);
}

double info_gain_approx(const CoinExperiment &exp) {
    const double x = 0.5 * expansion_log_ratio(exp);
    return 0.5 * x * x;
}

MonteCarloSummary monte_carlo_gain(const CoinExperiment &exp, std::uint64_t trials,
                                   std::uint64_t seed, const EntropyFn &u) {
    if (trials == 0) {
        throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    }
    const std::size_t n = exp.p.size();

    // Sample outcomes in a canonical order of (p_i, p2_i) so that relabeling
    // outcomes in both coins leaves every simulated dataset unchanged.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (exp.p[a] != exp.p[b]) return exp.p[a] < exp.p[b];
        return exp.p2[a] < exp.p2[b];
    });
    std::vector<double> pa(n), pb(n);
    for (std::size_t k = 0; k < n; ++k) {
        pa[k] = exp.p[order[k]];
        pb[k] = exp.p2[order[k]];
    }
    const CoinExperiment canon(ProbDist(pa), ProbDist(pb), exp.tosses, exp.prior_a);

    const double u0 = u(0.5, 0.5);
    const Rng root(seed);
    std::vector<std::uint64_t> counts(n);
    double sum_gain = 0.0, sum_gain2 = 0.0, sum_post = 0.0, sum_post2 = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = root.split(t);
        // Multinomial draw as a chain of conditional binomials.
        std::uint64_t remaining = exp.tosses;
        double mass = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k + 1 == n) {
                counts[k] = remaining;
                break;
            }
            const double cond = mass > 0.0 ? std::clamp(pa[k] / mass, 0.0, 1.0) : 0.0;
            counts[k] = rng.binomial(remaining, cond);
            remaining -= counts[k];
            mass = std::max(0.0, mass - pa[k]);
        }
        const PosteriorReport post = exact_posterior(canon, counts);
        const double gain = u0 - u(post.post_a, post.post_b);
        sum_gain += gain;
        sum_gain2 += gain * gain;
        sum_post += post.post_a;
        sum_post2 += post.post_a * post.post_a;
    }
    const double tn = static_cast<double>(trials);
    MonteCarloSummary s;
    s.trials = trials;
    s.mean_gain = sum_gain / tn;
    s.mean_post_a = sum_post / tn;
    if (trials > 1) {
        const double var_g = std::max(0.0, (sum_gain2 - tn * s.mean_gain * s.mean_gain) / (tn - 1));
        const double var_p = std::max(0.0, (sum_post2 - tn * s.mean_post_a * s.mean_post_a) / (tn - 1));
        s.std_error = std::sqrt(var_g / tn);
        s.post_a_std_error = std::sqrt(var_p / tn);
    }
    return s;
}

}  // namespace infogeo

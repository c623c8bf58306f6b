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

#include "infogeo/simplex.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "infogeo/error.hpp"

namespace infogeo {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    "sizes " + std::to_string(a) + " and " + std::to_string(b) + " differ");
    }
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "a distribution needs at least two outcomes");
    }
    for (double x : probs_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw Error(ErrorCode::InvalidArgument, "probabilities must be finite and non-negative");
        }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::InvalidArgument,
                    "probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

ProbDist ProbDist::renormalized(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw Error(ErrorCode::InvalidArgument, "weights must be finite and non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "weights sum to zero");
    }
    for (double &w : weights) w /= total;
    return ProbDist(std::move(weights));
}

ProbDist ProbDist::uniform(std::size_t n) {
    return ProbDist::renormalized(std::vector<double>(n, 1.0));
}

TangentVec::TangentVec(std::vector<double> deltas) : deltas_(std::move(deltas)) {
    double total = 0.0;
    for (double d : deltas_) {
        if (!std::isfinite(d)) {
            throw Error(ErrorCode::InvalidArgument, "tangent entries must be finite");
        }
        total += d;
    }
    if (std::abs(total) > kNormalizationTol) {
        throw Error(ErrorCode::InvalidArgument, "tangent entries must sum to zero");
    }
}

TangentVec TangentVec::between(const ProbDist &p, const ProbDist &p2) {
    require_same_size(p.size(), p2.size());
    std::vector<double> d(p.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = p2[i] - p[i];
    return TangentVec(std::move(d));
}

TangentVec TangentVec::scaled(double lambda) const {
    std::vector<double> d = deltas_;
    for (double &x : d) x *= lambda;
    return TangentVec(std::move(d));
}

double fisher_quadratic(const ProbDist &p, const TangentVec &dp) {
    require_same_size(p.size(), dp.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (dp[i] == 0.0) continue;
        if (p[i] == 0.0) {
            throw Error(ErrorCode::SingularMetric,
                        "perturbation at outcome " + std::to_string(i) + " where p = 0");
        }
        sum += dp[i] * dp[i] / p[i];
    }
    return 0.25 * sum;
}

double bhattacharyya(const ProbDist &p, const ProbDist &p2) {
    require_same_size(p.size(), p2.size());
    double bc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * p2[i]);
    return bc;
}

double statistical_distance(const ProbDist &p, const ProbDist &p2) {
    require_same_size(p.size(), p2.size());
    // Angle between the square-root embeddings, computed from the chord
    // |q - q2| = 2 sin(d/2) so that identical inputs give exactly zero.
    double chord2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = std::sqrt(p[i]) - std::sqrt(p2[i]);
        chord2 += diff * diff;
    }
    const double half_chord = std::min(1.0, 0.5 * std::sqrt(chord2));
    return std::min(2.0 * std::asin(half_chord), M_PI / 2);
}

double kl_divergence(const ProbDist &p, const ProbDist &p2) {
    require_same_size(p.size(), p2.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (p2[i] == 0.0) {
            throw Error(ErrorCode::AbsoluteContinuityViolation,
                        "p2 vanishes at outcome " + std::to_string(i) + " where p > 0");
        }
        // p ln(p/p2) = -p log1p((p2 - p)/p); accurate when p2 is close to p.
        sum -= p[i] * std::log1p((p2[i] - p[i]) / p[i]);
    }
    return std::max(sum, 0.0);
}

std::vector<double> sqrt_embed(const ProbDist &p) {
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = std::sqrt(p[i]);
    return q;
}

}  // namespace infogeo

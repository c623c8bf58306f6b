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

#include <cstddef>
#include <span>
#include <vector>

namespace infogeo {

inline constexpr double kNormalizationTol = 1e-12;

/// A probability distribution over N >= 2 outcomes.
class ProbDist {
  public:
    /// Validates: N >= 2, finite non-negative entries, sum 1 within 1e-12.
    explicit ProbDist(std::vector<double> probs);

    /// Accepts any non-negative weights with positive sum and rescales them.
    static ProbDist renormalized(std::vector<double> weights);

    static ProbDist uniform(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return probs_; }
    [[nodiscard]] const std::vector<double> &vec() const noexcept { return probs_; }

    friend bool operator==(const ProbDist &, const ProbDist &) = default;

  private:
    std::vector<double> probs_;
};

/// A perturbation dp tangent to the simplex (entries sum to zero).
class TangentVec {
  public:
    explicit TangentVec(std::vector<double> deltas);

    /// Difference p2 - p of two distributions of equal size.
    static TangentVec between(const ProbDist &p, const ProbDist &p2);

    [[nodiscard]] std::size_t size() const noexcept { return deltas_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return deltas_[i]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return deltas_; }

    [[nodiscard]] TangentVec scaled(double lambda) const;

  private:
    std::vector<double> deltas_;
};

/// Fisher-Rao quadratic form ds^2 = 1/4 sum dp_i^2 / p_i.
double fisher_quadratic(const ProbDist &p, const TangentVec &dp);

/// Statistical distance arccos(sum sqrt(p_i p2_i)), in [0, pi/2].
double statistical_distance(const ProbDist &p, const ProbDist &p2);

/// Bhattacharyya coefficient sum sqrt(p_i p2_i).
double bhattacharyya(const ProbDist &p, const ProbDist &p2);

/// Kullback-Leibler divergence sum p_i ln(p_i / p2_i), in nats.
double kl_divergence(const ProbDist &p, const ProbDist &p2);

/// Entry-wise square root; a unit vector in the positive orthant.
std::vector<double> sqrt_embed(const ProbDist &p);

}  // namespace infogeo

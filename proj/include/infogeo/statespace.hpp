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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "infogeo/simplex.hpp"

namespace infogeo {

using Complex = std::complex<double>;

/// Probabilities P_1..P_2N of the 2N underlying events.
class EventDist {
  public:
    explicit EventDist(std::vector<double> event_probs);

    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t q) const { return probs_[q]; }
    [[nodiscard]] const std::vector<double> &vec() const noexcept { return probs_; }

  private:
    std::vector<double> probs_;
};

/// Unit vector Q on the hypersphere S^{2N-1}; P_q = Q_q^2.
class RealState {
  public:
    /// Requires an even number (>= 2) of components with norm 1 within 1e-12.
    explicit RealState(std::vector<double> q);

    /// Rescales any non-zero vector of even length onto the sphere.
    static RealState normalized(std::vector<double> q);

    [[nodiscard]] std::size_t size() const noexcept { return q_.size(); }
    [[nodiscard]] std::size_t outcomes() const noexcept { return q_.size() / 2; }
    [[nodiscard]] double operator[](std::size_t i) const { return q_[i]; }
    [[nodiscard]] const std::vector<double> &vec() const noexcept { return q_; }

    friend bool operator==(const RealState &, const RealState &) = default;

  private:
    std::vector<double> q_;
};

/// Affine phase law theta = a * chi + b.
struct GaugeConvention {
    double a = 1.0;
    double b = 0.0;

    GaugeConvention() = default;
    GaugeConvention(double a_, double b_);
};

/// (p_i; theta_i) coordinates, with theta reduced to [0, 2 pi).
class PolarState {
  public:
    PolarState(ProbDist p, std::vector<double> theta);

    [[nodiscard]] const ProbDist &probs() const noexcept { return p_; }
    [[nodiscard]] const std::vector<double> &theta() const noexcept { return theta_; }
    [[nodiscard]] std::size_t size() const noexcept { return theta_.size(); }

  private:
    ProbDist p_;
    std::vector<double> theta_;
};

/// N complex amplitudes with sum |v_i|^2 = 1.
class ComplexState {
  public:
    explicit ComplexState(std::vector<Complex> v);
    static ComplexState normalized(std::vector<Complex> v);
    static ComplexState basis(std::size_t n, std::size_t k);

    [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return v_[i]; }
    [[nodiscard]] const std::vector<Complex> &vec() const noexcept { return v_; }

    [[nodiscard]] ComplexState with_global_phase(double alpha) const;

    friend bool operator==(const ComplexState &, const ComplexState &) = default;

  private:
    std::vector<Complex> v_;
};

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double theta);

/// p_i = P_{2i-1} + P_{2i}. Outcome counts below two are rejected by ProbDist.
ProbDist coarse_grain(const EventDist &events);

/// Pairwise sums of Q_q^2 without the N >= 2 requirement of ProbDist.
std::vector<double> outcome_probs(std::span<const double> q);

EventDist state_event_probs(const RealState &q);

RealState from_polar(const PolarState &ps);

/// Inverse of from_polar; theta_i = 0 where p_i = 0.
PolarState to_polar(const RealState &q);

ComplexState to_complex(const RealState &q);
RealState from_complex(const ComplexState &v);

/// Born probabilities |v_i|^2 for the reference measurement.
ProbDist born_probs(const ComplexState &v);

/// Adds chi0 to every chi_i, i.e. a * chi0 to every theta_i.
PolarState gauge_shift(const PolarState &ps, double chi0, const GaugeConvention &g = {});

/// ds^2 = 1/4 sum dp_i^2/p_i + sum p_i (dtheta_i + a dchi_i)^2.
///
/// `dtheta` perturbs the phases directly and `dchi` perturbs the gauge
/// coordinates, which move theta at rate theta'(chi) = a.
double polar_metric_quadratic(const PolarState &ps, const TangentVec &dp,
                              std::span<const double> dtheta, const GaugeConvention &g,
                              std::span<const double> dchi);

/// Linearized image dQ of a polar perturbation (dp, dtheta) at `ps`.
std::vector<double> polar_pushforward(const PolarState &ps, const TangentVec &dp,
                                      std::span<const double> dtheta);

/// dQ_q = sign(Q_q) dP_q / (2 |Q_q|): the tangent to Q under P_q = Q_q^2.
std::vector<double> event_tangent_to_state(const RealState &q, std::span<const double> dP);

struct MeasureCheck {
    bool passed = false;
    double deviation = 0.0;  // max|theta'| - min|theta'|
    double mean = 0.0;
};

/// Passes iff the induced marginal measure c|theta'| is flat over the grid:
/// max - min <= tolerance * mean.
MeasureCheck measure_invariance_check(std::span<const double> theta_prime_samples,
                                      double tolerance = 1e-9);

/// |theta'(chi)| on `points` uniformly spaced grid points over [lo, hi], by
/// fourth-order central differences.
std::vector<double> sample_theta_prime(const std::function<double(double)> &theta, double lo,
                                       double hi, std::size_t points);

/// Marginal measure mu(chi) = c |theta'(chi)| under the affine law, with c
/// fixed so that mu integrates to one over chi in [0, 2 pi).
double affine_measure_density(const GaugeConvention &g, double chi);

}  // namespace infogeo

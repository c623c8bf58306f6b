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

#include "infogeo/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "infogeo/error.hpp"

namespace infogeo {

Measurement::Measurement(UnitaryMap u, std::vector<double> phases)
    : u_(std::move(u)), phases_(std::move(phases)) {
    if (phases_.empty()) phases_.assign(u_.dim(), 0.0);
    if (phases_.size() != u_.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "one phase per outcome is required");
    }
}

Measurement Measurement::reference(std::size_t n) { return Measurement(UnitaryMap::identity(n)); }

ComplexState Measurement::basis_vector(std::size_t k) const {
    if (k >= outcomes()) throw Error(ErrorCode::InvalidArgument, "outcome index out of range");
    // Row k of U, conjugated: U^H e_k.
    const Complex phase = std::polar(1.0, phases_[k]);
    std::vector<Complex> v(outcomes());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = phase * std::conj(u_.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
    }
    return ComplexState::normalized(std::move(v));
}

Measurement Measurement::with_phases(std::vector<double> phases) const {
    return Measurement(u_, std::move(phases));
}

ProbDist outcome_distribution(const Measurement &meas, const ComplexState &v) {
    if (v.size() != meas.outcomes()) {
        throw Error(ErrorCode::DimensionMismatch, "state and measurement differ in dimension");
    }
    std::vector<double> p(meas.outcomes());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const ComplexState basis = meas.basis_vector(i);
        Complex overlap = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) overlap += std::conj(basis[j]) * v[j];
        p[i] = std::norm(overlap);
    }
    return ProbDist(std::move(p));
}

MeasurementRecord apply_measurement(const Measurement &meas, const ComplexState &v,
                                    std::size_t forced_outcome) {
    const ProbDist p = outcome_distribution(meas, v);
    if (forced_outcome >= p.size()) {
        throw Error(ErrorCode::InvalidArgument, "forced outcome out of range");
    }
    if (p[forced_outcome] < kImpossibleOutcomeTol) {
        throw Error(ErrorCode::ImpossibleOutcome, "forced outcome has zero probability");
    }
    return MeasurementRecord{forced_outcome, p[forced_outcome], meas.basis_vector(forced_outcome)};
}

MeasurementRecord apply_measurement(const Measurement &meas, const ComplexState &v, Rng &rng) {
    const ProbDist p = outcome_distribution(meas, v);
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t k = 0;
    for (; k + 1 < p.size(); ++k) {
        cum += p[k];
        if (u < cum && p[k] > 0.0) break;
    }
    // Guard against landing on a zero-probability tail through rounding.
    while (p[k] < kImpossibleOutcomeTol && k > 0) --k;
    return MeasurementRecord{k, p[k], meas.basis_vector(k)};
}

std::vector<std::uint64_t> sample_outcomes(const Measurement &meas, const ComplexState &v,
                                           std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw Error(ErrorCode::InvalidArgument, "shots must be positive");
    const ProbDist p = outcome_distribution(meas, v);
    Rng rng(seed);
    std::vector<std::uint64_t> counts(p.size(), 0);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k + 1 == p.size()) {
            counts[k] = remaining;
            break;
        }
        const double cond = mass > 0.0 ? std::clamp(p[k] / mass, 0.0, 1.0) : 0.0;
        counts[k] = rng.binomial(remaining, cond);
        remaining -= counts[k];
        mass = std::max(0.0, mass - p[k]);
    }
    return counts;
}

ReproducibilityResult arrangement_reproducibility(const Measurement &meas,
                                                  const ComplexMatrix &post_interaction,
                                                  double tol) {
    const auto n = static_cast<Eigen::Index>(meas.outcomes());
    if (post_interaction.rows() != n || post_interaction.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "post-interaction has the wrong size");
    }
    const ComplexMatrix &u = meas.pre_interaction().matrix();
    ReproducibilityResult r;
    for (Eigen::Index k = 0; k < n; ++k) {
        // Output of the arrangement after outcome k, fed back through U.
        Eigen::VectorXcd out = post_interaction.col(k) * std::polar(1.0, meas.phases()[k]);
        const Eigen::VectorXcd measured = u * out;
        const double total = measured.squaredNorm();
        const double pk = total > 0.0 ? std::norm(measured(k)) / total : 0.0;
        const double dev = std::abs(1.0 - pk);
        if (dev > r.max_deviation) {
            r.max_deviation = dev;
            r.witness = static_cast<std::size_t>(k);
        }
    }
    r.passed = r.max_deviation <= tol;
    if (r.passed) r.witness.reset();
    return r;
}

SimulabilityResult simulability_roundtrip(const Measurement &meas, std::size_t alternatives,
                                          std::uint64_t seed) {
    SimulabilityResult s;
    s.inverse = arrangement_reproducibility(meas, meas.pre_interaction().inverse().matrix());
    const std::size_t n = meas.outcomes();
    for (std::size_t a = 0; a < alternatives; ++a) {
        const UnitaryMap w = random_unitary(n, mix64(seed ^ (0xA17E + a)));
        const ComplexMatrix v_alt = meas.pre_interaction().inverse().matrix() * w.matrix();
        // Only count alternatives that actually move some e_k off v'_k (up to phase).
        bool moved = false;
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
            if (1.0 - std::norm(w.matrix()(k, k)) > 1e-9) moved = true;
        }
        if (!moved) continue;
        ++s.alternatives_tested;
        if (!arrangement_reproducibility(meas, v_alt).passed) ++s.alternatives_broken;
    }
    s.passed = s.inverse.passed && s.alternatives_broken == s.alternatives_tested;
    return s;
}

}  // namespace infogeo

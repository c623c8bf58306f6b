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
#include <optional>
#include <vector>

#include "infogeo/rng.hpp"
#include "infogeo/transforms.hpp"

namespace infogeo {

/// A reproducible measurement simulated as U, then the reference
/// (standard-basis) measurement, then V = U^{-1}. Its eigenbasis is
/// v'_i = U^{-1} (e^{i phi_i} e_i).
class Measurement {
  public:
    explicit Measurement(UnitaryMap u, std::vector<double> phases = {});

    static Measurement reference(std::size_t n);

    [[nodiscard]] const UnitaryMap &pre_interaction() const noexcept { return u_; }
    [[nodiscard]] const std::vector<double> &phases() const noexcept { return phases_; }
    [[nodiscard]] std::size_t outcomes() const noexcept { return u_.dim(); }

    /// v'_k, the output state recorded for outcome k.
    [[nodiscard]] ComplexState basis_vector(std::size_t k) const;

    [[nodiscard]] Measurement with_phases(std::vector<double> phases) const;

  private:
    UnitaryMap u_;
    std::vector<double> phases_;
};

struct MeasurementRecord {
    std::size_t outcome = 0;  // zero-based
    double probability = 0.0;
    ComplexState output_state;
};

inline constexpr double kImpossibleOutcomeTol = 1e-14;

/// Born rule p_i = |v'_i^H v|^2.
ProbDist outcome_distribution(const Measurement &meas, const ComplexState &v);

/// Runs the arrangement once with a forced outcome.
MeasurementRecord apply_measurement(const Measurement &meas, const ComplexState &v,
                                    std::size_t forced_outcome);

/// Runs the arrangement once, drawing the outcome from `rng`.
MeasurementRecord apply_measurement(const Measurement &meas, const ComplexState &v, Rng &rng);

/// Multinomial outcome counts for `shots` independent runs.
std::vector<std::uint64_t> sample_outcomes(const Measurement &meas, const ComplexState &v,
                                           std::uint64_t shots, std::uint64_t seed);

struct ReproducibilityResult {
    bool passed = true;
    double max_deviation = 0.0;  // max over k of 1 - P(outcome k | output of outcome k)
    std::optional<std::size_t> witness;
};

/// Feeds V (e^{i phi_k} e_k) back into U -> A for each k and checks that
/// outcome k recurs with probability 1 within `tol`.
ReproducibilityResult arrangement_reproducibility(const Measurement &meas,
                                                  const ComplexMatrix &post_interaction,
                                                  double tol = kRoundTripTol);

struct SimulabilityResult {
    bool passed = false;
    ReproducibilityResult inverse;             // V = U^{-1}
    std::size_t alternatives_tested = 0;
    std::size_t alternatives_broken = 0;       // wrong V that broke reproducibility
};

/// Checks that V = U^{-1} makes the arrangement reproducible and that each of
/// `alternatives` random unitaries V mapping some e_k away from v'_k breaks
/// reproducibility on that k.
SimulabilityResult simulability_roundtrip(const Measurement &meas, std::size_t alternatives = 8,
                                          std::uint64_t seed = 0);

}  // namespace infogeo

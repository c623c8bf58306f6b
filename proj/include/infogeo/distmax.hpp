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
#include <span>
#include <vector>

#include "infogeo/measurement.hpp"

namespace infogeo {

/// arccos |u^H v|, in [0, pi/2].
double hilbert_distance(const ComplexState &u, const ComplexState &v);

/// Statistical distance between the outcome distributions of `meas` on u and v.
double measured_distance(const Measurement &meas, const ComplexState &u, const ComplexState &v);

/// Unitary generated by Givens-style complex plane rotations and diagonal
/// phases. Takes n^2 parameters: for each pair j < k an angle and a phase,
/// followed by n diagonal phases. Every unitary is reachable.
UnitaryMap givens_unitary(std::size_t n, std::span<const double> params);
std::size_t givens_parameter_count(std::size_t n);

struct DistinguishabilityResult {
    double max_ds = 0.0;
    Measurement argmax_measurement;
    double hilbert_distance = 0.0;
    double gap = 0.0;  // |max_ds - hilbert_distance|
    std::size_t evaluations = 0;
};

/// Maximizes the statistical distance over measurements by `budget`
/// random restarts, each refined by coordinate-wise step-halving search.
/// Restart r uses substream r of `seed`, so a larger budget never lowers the
/// result and ties keep the lowest restart index.
DistinguishabilityResult maximize_statistical_distance(const ComplexState &u, const ComplexState &v,
                                                       std::size_t budget, std::uint64_t seed);

/// Largest statistical distance seen over `samples` Haar-random measurements.
double certify_upper_bound(const ComplexState &u, const ComplexState &v, std::size_t samples,
                           std::uint64_t seed);

}  // namespace infogeo

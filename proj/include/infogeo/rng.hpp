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
#include <random>

namespace infogeo {

/// Seedable, splittable generator. `Rng(seed, stream)` yields an independent
/// substream for every stream index, so work items can be drawn in any order
/// (or on any worker) and still reproduce bit-for-bit.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Child generator for substream `index` of this generator's stream.
    [[nodiscard]] Rng split(std::uint64_t index) const;

    result_type operator()() { return engine_(); }
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    double normal();                  // standard normal
    std::uint64_t binomial(std::uint64_t trials, double prob);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream() const noexcept { return stream_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, exposed for deriving stream keys.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace infogeo

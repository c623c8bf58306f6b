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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "infogeo/statespace.hpp"

namespace infogeo {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kRoundTripTol = 1e-12;

/// A 2N x 2N real orthogonal matrix acting on RealState.
class OrthogonalMap {
  public:
    /// Throws NotOrthogonal unless ||m^T m - I||_F <= tol and the size is even.
    explicit OrthogonalMap(RealMatrix m, double tol = kStructuralTol);

    [[nodiscard]] const RealMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] std::size_t outcomes() const noexcept { return dim() / 2; }

    [[nodiscard]] RealState apply(const RealState &q) const;
    [[nodiscard]] OrthogonalMap compose(const OrthogonalMap &rhs) const;  // this * rhs

  private:
    RealMatrix m_;
};

/// N x N complex unitary; acts as v -> u v.
class UnitaryMap {
  public:
    explicit UnitaryMap(ComplexMatrix u, double tol = kStructuralTol);
    static UnitaryMap identity(std::size_t n);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return u_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(u_.rows()); }
    [[nodiscard]] ComplexState apply(const ComplexState &v) const;
    [[nodiscard]] UnitaryMap inverse() const;

  private:
    ComplexMatrix u_;
};

/// N x N complex unitary u; acts as v -> u conj(v).
class AntiunitaryMap {
  public:
    explicit AntiunitaryMap(ComplexMatrix u, double tol = kStructuralTol);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return u_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(u_.rows()); }
    [[nodiscard]] ComplexState apply(const ComplexState &v) const;

  private:
    ComplexMatrix u_;
};

/// Block-diagonal J with 2x2 blocks [[0,-1],[1,0]]; J^2 = -I.
RealMatrix complex_structure(std::size_t outcomes);

enum class TransformKind { Type1, Type2, Neither };

const char *transform_kind_name(TransformKind kind) noexcept;

struct TransformType {
    TransformKind kind = TransformKind::Neither;
    int beta = -1;              // 0 for Type1, 1 for Type2, -1 otherwise
    RealMatrix alpha;           // block scale factors (empty for Neither)
    RealMatrix phi;             // block rotation angles in [0, 2 pi)
    double commutator = 0.0;    // ||mJ - Jm||_F
    double anticommutator = 0.0;  // ||mJ + Jm||_F
};

/// Type1 iff m commutes with J, Type2 iff it anticommutes; block parameters
/// are recovered from the first column of each 2x2 block.
TransformType classify(const OrthogonalMap &m, double tol = kStructuralTol);

UnitaryMap to_unitary(const OrthogonalMap &m);
AntiunitaryMap to_antiunitary(const OrthogonalMap &m);
OrthogonalMap from_unitary(const UnitaryMap &u);
OrthogonalMap from_antiunitary(const AntiunitaryMap &u);

/// Assembles alpha_ij R(phi_ij) refl^{beta_ij} blocks into a 2N x 2N matrix
/// without checking orthogonality. `betas` is row-major N x N, 0 or 1 each.
RealMatrix assemble_blocks(const RealMatrix &alpha, const RealMatrix &phi,
                           std::span<const int> betas);

/// Haar-distributed orthogonal matrix via QR of a standard-normal matrix.
OrthogonalMap random_orthogonal(std::size_t dim, std::uint64_t seed);
UnitaryMap random_unitary(std::size_t dim, std::uint64_t seed);

/// Haar-random point on the unit sphere of dimension `dim`.
RealState random_real_state(std::size_t dim, std::uint64_t seed);

struct ProbeResult {
    bool passed = true;
    double max_deviation = 0.0;
    std::optional<std::size_t> witness_state;  // index into the state sample
    std::optional<double> witness_chi0;
};

/// Compares outcome probabilities of m Q against m (gauge-shifted Q) for
/// every state/shift pair. Passes iff the worst deviation is <= tol.
ProbeResult gauge_invariance_probe(const OrthogonalMap &m, std::span<const RealState> states,
                                   std::span<const double> chi0s, const GaugeConvention &g = {},
                                   double tol = kStructuralTol);

/// Default sample: 32 Haar states and 16 uniform shifts in [0, 2 pi).
ProbeResult gauge_invariance_probe(const OrthogonalMap &m, std::uint64_t seed,
                                   std::size_t states = 32, std::size_t shifts = 16,
                                   const GaugeConvention &g = {});

}  // namespace infogeo

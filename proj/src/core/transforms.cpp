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

#include "infogeo/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "infogeo/error.hpp"
#include "infogeo/rng.hpp"

namespace infogeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double orthogonality_defect(const RealMatrix &m) {
    return (m.transpose() * m - RealMatrix::Identity(m.rows(), m.cols())).norm();
}

double unitarity_defect(const ComplexMatrix &u) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

void require_unitary(const ComplexMatrix &u, double tol) {
    if (u.rows() == 0 || u.rows() != u.cols()) {
        throw Error(ErrorCode::NotUnitary, "matrix must be square and non-empty");
    }
    if (!u.allFinite() || unitarity_defect(u) > tol) {
        throw Error(ErrorCode::NotUnitary, "||u^H u - I||_F exceeds tolerance");
    }
}

Eigen::VectorXd to_eigen(const RealState &q) {
    return Eigen::Map<const Eigen::VectorXd>(q.vec().data(), static_cast<Eigen::Index>(q.size()));
}

// Real 2N x 2N image of v -> u v (beta = 0) or v -> u conj(v) (beta = 1).
RealMatrix realify(const ComplexMatrix &u, int beta) {
    const Eigen::Index n = u.rows();
    RealMatrix m(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = u(i, j).real(), im = u(i, j).imag();
            if (beta == 0) {
                m.block<2, 2>(2 * i, 2 * j) << re, -im, im, re;
            } else {
                m.block<2, 2>(2 * i, 2 * j) << re, im, im, -re;
            }
        }
    }
    return m;
}

ComplexMatrix complexify(const RealMatrix &m) {
    const Eigen::Index n = m.rows() / 2;
    ComplexMatrix u(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) u(i, j) = Complex(m(2 * i, 2 * j), m(2 * i + 1, 2 * j));
    }
    return u;
}

}  // namespace

OrthogonalMap::OrthogonalMap(RealMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols() || m_.rows() % 2 != 0) {
        throw Error(ErrorCode::NotOrthogonal, "matrix must be square with even, non-zero size");
    }
    if (!m_.allFinite() || orthogonality_defect(m_) > tol) {
        throw Error(ErrorCode::NotOrthogonal, "||m^T m - I||_F exceeds tolerance");
    }
}

RealState OrthogonalMap::apply(const RealState &q) const {
    if (q.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "state size differs from map");
    const Eigen::VectorXd out = m_ * to_eigen(q);
    return RealState::normalized(std::vector<double>(out.data(), out.data() + out.size()));
}

OrthogonalMap OrthogonalMap::compose(const OrthogonalMap &rhs) const {
    if (rhs.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "maps differ in size");
    return OrthogonalMap(m_ * rhs.m_);
}

UnitaryMap::UnitaryMap(ComplexMatrix u, double tol) : u_(std::move(u)) { require_unitary(u_, tol); }

UnitaryMap UnitaryMap::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return UnitaryMap(ComplexMatrix::Identity(k, k));
}

ComplexState UnitaryMap::apply(const ComplexState &v) const {
    if (v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "state size differs from map");
    const Eigen::VectorXcd x =
        Eigen::Map<const Eigen::VectorXcd>(v.vec().data(), static_cast<Eigen::Index>(v.size()));
    const Eigen::VectorXcd y = u_ * x;
    return ComplexState::normalized(std::vector<Complex>(y.data(), y.data() + y.size()));
}

UnitaryMap UnitaryMap::inverse() const { return UnitaryMap(u_.adjoint()); }

AntiunitaryMap::AntiunitaryMap(ComplexMatrix u, double tol) : u_(std::move(u)) {
    require_unitary(u_, tol);
}

ComplexState AntiunitaryMap::apply(const ComplexState &v) const {
    if (v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "state size differs from map");
    const Eigen::VectorXcd x =
        Eigen::Map<const Eigen::VectorXcd>(v.vec().data(), static_cast<Eigen::Index>(v.size()));
    const Eigen::VectorXcd y = u_ * x.conjugate();
    return ComplexState::normalized(std::vector<Complex>(y.data(), y.data() + y.size()));
}

RealMatrix complex_structure(std::size_t outcomes) {
    const auto n = static_cast<Eigen::Index>(outcomes);
    RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        j(2 * i, 2 * i + 1) = -1.0;
        j(2 * i + 1, 2 * i) = 1.0;
    }
    return j;
}

const char *transform_kind_name(TransformKind kind) noexcept {
    switch (kind) {
    case TransformKind::Type1: return "Type1";
    case TransformKind::Type2: return "Type2";
    case TransformKind::Neither: return "Neither";
    }
    return "Neither";
}

TransformType classify(const OrthogonalMap &m, double tol) {
    const RealMatrix &a = m.matrix();
    const RealMatrix j = complex_structure(m.outcomes());
    TransformType t;
    t.commutator = (a * j - j * a).norm();
    t.anticommutator = (a * j + j * a).norm();
    if (t.commutator <= tol) {
        t.kind = TransformKind::Type1;
        t.beta = 0;
    } else if (t.anticommutator <= tol) {
        t.kind = TransformKind::Type2;
        t.beta = 1;
    } else {
        return t;
    }
    // Both block shapes share the first column alpha (cos phi, sin phi).
    const auto n = static_cast<Eigen::Index>(m.outcomes());
    t.alpha.resize(n, n);
    t.phi.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double c = a(2 * i, 2 * k), s = a(2 * i + 1, 2 * k);
            t.alpha(i, k) = std::hypot(c, s);
            t.phi(i, k) = t.alpha(i, k) > 0.0 ? wrap_angle(std::atan2(s, c)) : 0.0;
        }
    }
    return t;
}

UnitaryMap to_unitary(const OrthogonalMap &m) {
    if (classify(m).kind != TransformKind::Type1) {
        throw Error(ErrorCode::WrongType, "map does not commute with the complex structure");
    }
    return UnitaryMap(complexify(m.matrix()));
}

AntiunitaryMap to_antiunitary(const OrthogonalMap &m) {
    if (classify(m).kind != TransformKind::Type2) {
        throw Error(ErrorCode::WrongType, "map does not anticommute with the complex structure");
    }
    return AntiunitaryMap(complexify(m.matrix()));
}

OrthogonalMap from_unitary(const UnitaryMap &u) { return OrthogonalMap(realify(u.matrix(), 0)); }

OrthogonalMap from_antiunitary(const AntiunitaryMap &u) {
    return OrthogonalMap(realify(u.matrix(), 1));
}

RealMatrix assemble_blocks(const RealMatrix &alpha, const RealMatrix &phi, std::span<const int> betas) {
    const Eigen::Index n = alpha.rows();
    if (alpha.cols() != n || phi.rows() != n || phi.cols() != n ||
        betas.size() != static_cast<std::size_t>(n * n)) {
        throw Error(ErrorCode::DimensionMismatch, "block parameter shapes disagree");
    }
    RealMatrix m(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double c = alpha(i, k) * std::cos(phi(i, k));
            const double s = alpha(i, k) * std::sin(phi(i, k));
            const int beta = betas[static_cast<std::size_t>(i * n + k)];
            if (beta == 0) {
                m.block<2, 2>(2 * i, 2 * k) << c, -s, s, c;
            } else if (beta == 1) {
                m.block<2, 2>(2 * i, 2 * k) << c, s, s, -c;
            } else {
                throw Error(ErrorCode::InvalidArgument, "beta must be 0 or 1");
            }
        }
    }
    return m;
}

OrthogonalMap random_orthogonal(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
    const auto d = static_cast<Eigen::Index>(dim);
    Rng rng(seed);
    RealMatrix g(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) g(r, c) = rng.normal();
    }
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    const RealMatrix &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < d; ++k) {
        if (r(k, k) < 0.0) q.col(k) *= -1.0;
    }
    return OrthogonalMap(std::move(q));
}

UnitaryMap random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    const auto d = static_cast<Eigen::Index>(dim);
    Rng rng(seed);
    ComplexMatrix g(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const double re = rng.normal();
            g(r, c) = Complex(re, rng.normal()) * M_SQRT1_2;
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < d; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return UnitaryMap(std::move(q));
}

RealState random_real_state(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> q(dim);
    for (double &x : q) x = rng.normal();
    return RealState::normalized(std::move(q));
}

ProbeResult gauge_invariance_probe(const OrthogonalMap &m, std::span<const RealState> states,
                                   std::span<const double> chi0s, const GaugeConvention &g,
                                   double tol) {
    if (states.empty() || chi0s.empty()) {
        throw Error(ErrorCode::InvalidArgument, "probe needs at least one state and one shift");
    }
    ProbeResult r;
    for (std::size_t s = 0; s < states.size(); ++s) {
        const RealState &q = states[s];
        if (q.size() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "state size differs from map");
        const std::vector<double> base = outcome_probs(m.apply(q).vec());
        const PolarState polar = to_polar(q);
        for (double chi0 : chi0s) {
            const RealState shifted = from_polar(gauge_shift(polar, chi0, g));
            const std::vector<double> moved = outcome_probs(m.apply(shifted).vec());
            for (std::size_t i = 0; i < base.size(); ++i) {
                const double dev = std::abs(moved[i] - base[i]);
                if (dev > r.max_deviation) {
                    r.max_deviation = dev;
                    r.witness_state = s;
                    r.witness_chi0 = chi0;
                }
            }
        }
    }
    r.passed = r.max_deviation <= tol;
    if (r.passed) {
        r.witness_state.reset();
        r.witness_chi0.reset();
    }
    return r;
}

ProbeResult gauge_invariance_probe(const OrthogonalMap &m, std::uint64_t seed, std::size_t states,
                                   std::size_t shifts, const GaugeConvention &g) {
    const Rng root(seed);
    std::vector<RealState> sample;
    sample.reserve(states);
    for (std::size_t k = 0; k < states; ++k) {
        sample.push_back(random_real_state(m.dim(), mix64(seed + 0x1000 + k)));
    }
    Rng shift_rng = root.split(0xC410);
    std::vector<double> chi0s(shifts);
    for (double &c : chi0s) c = shift_rng.uniform(0.0, kTwoPi);
    return gauge_invariance_probe(m, sample, chi0s, g);
}

}  // namespace infogeo

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "infogeo/error.hpp"
#include "infogeo/rng.hpp"
#include "infogeo/transforms.hpp"

namespace infogeo {
namespace {

RealMatrix blocks_from(const UnitaryMap &u, int beta) {
    const auto n = u.matrix().rows();
    RealMatrix alpha(n, n), phi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            alpha(i, j) = std::abs(u.matrix()(i, j));
            phi(i, j) = std::arg(u.matrix()(i, j));
        }
    }
    const std::vector<int> betas(static_cast<std::size_t>(n * n), beta);
    return assemble_blocks(alpha, phi, betas);
}

TEST(ComplexStructure, SquaresToMinusIdentity) {
    const RealMatrix j = complex_structure(3);
    EXPECT_LT((j * j + RealMatrix::Identity(6, 6)).norm(), 1e-15);
    EXPECT_EQ(j(1, 0), 1.0);
    EXPECT_EQ(j(0, 1), -1.0);
}

TEST(Orthogonal, Validation) {
    RealMatrix m = RealMatrix::Identity(4, 4);
    m(0, 0) = 1.1;
    try {
        OrthogonalMap bad(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotOrthogonal);
    }
    EXPECT_THROW(OrthogonalMap(RealMatrix::Identity(3, 3)), Error);
}

TEST(Classify, RotationPerPairIsType1) {
    const double t = 0.7;
    RealMatrix m = RealMatrix::Zero(4, 4);
    m.block(0, 0, 2, 2) << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    m.block(2, 2, 2, 2) << std::cos(2 * t), -std::sin(2 * t), std::sin(2 * t), std::cos(2 * t);
    const TransformType c = classify(OrthogonalMap(m));
    EXPECT_EQ(c.kind, TransformKind::Type1);
    EXPECT_EQ(c.beta, 0);
    EXPECT_NEAR(c.alpha(0, 0), 1.0, 1e-15);
    EXPECT_NEAR(c.phi(0, 0), t, 1e-15);
    EXPECT_NEAR(c.phi(1, 1), 2 * t, 1e-15);
    const UnitaryMap u = to_unitary(OrthogonalMap(m));
    EXPECT_NEAR(std::abs(u.matrix()(0, 0) - std::polar(1.0, t)), 0.0, 1e-15);
}

TEST(Classify, ConjugationIsType2) {
    RealMatrix m = RealMatrix::Identity(4, 4);
    m(1, 1) = -1.0;
    m(3, 3) = -1.0;
    const OrthogonalMap conj(m);
    EXPECT_EQ(classify(conj).kind, TransformKind::Type2);
    EXPECT_THROW((void)to_unitary(conj), Error);
    const AntiunitaryMap a = to_antiunitary(conj);
    EXPECT_LT((a.matrix() - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
    EXPECT_NEAR((m - RealMatrix::Identity(4, 4)).norm(), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(Classify, PlaneRotationAcrossPairsIsNeither) {
    RealMatrix m = RealMatrix::Identity(4, 4);
    const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
    m(0, 0) = c;
    m(0, 2) = -s;
    m(2, 0) = s;
    m(2, 2) = c;
    const OrthogonalMap g(m);
    EXPECT_EQ(classify(g).kind, TransformKind::Neither);
    try {
        (void)to_unitary(g);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongType);
    }
    const ProbeResult r = gauge_invariance_probe(g, 1);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(r.witness_state.has_value());
    EXPECT_TRUE(r.witness_chi0.has_value());
}

TEST(Correspondence, ConstructedBlocksRoundTrip) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const UnitaryMap u = random_unitary(3, s);
        const OrthogonalMap m1(blocks_from(u, 0));
        EXPECT_EQ(classify(m1).kind, TransformKind::Type1);
        EXPECT_LT((to_unitary(m1).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((from_unitary(u).matrix() - m1.matrix()).cwiseAbs().maxCoeff(), 1e-15);
        const OrthogonalMap m2(blocks_from(u, 1));
        EXPECT_EQ(classify(m2).kind, TransformKind::Type2);
        EXPECT_LT((to_antiunitary(m2).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((from_antiunitary(AntiunitaryMap(u.matrix())).matrix() - m2.matrix()).cwiseAbs().maxCoeff(),
                  1e-15);
    }
}

TEST(Correspondence, Equivariance) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const UnitaryMap u = random_unitary(3, 100 + s);
        const RealState q = random_real_state(6, 200 + s);
        const ComplexState lhs = to_complex(from_unitary(u).apply(q));
        const ComplexState rhs = u.apply(to_complex(q));
        const ComplexState lhs2 = to_complex(from_antiunitary(AntiunitaryMap(u.matrix())).apply(q));
        const ComplexState rhs2 = AntiunitaryMap(u.matrix()).apply(to_complex(q));
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-12);
            EXPECT_LT(std::abs(lhs2[i] - rhs2[i]), 1e-12);
        }
    }
}

TEST(Correspondence, TypedMapsPassGaugeProbe) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const UnitaryMap u = random_unitary(2, s);
        EXPECT_TRUE(gauge_invariance_probe(OrthogonalMap(blocks_from(u, 0)), s).passed);
        EXPECT_TRUE(gauge_invariance_probe(OrthogonalMap(blocks_from(u, 1)), s).passed);
    }
}

TEST(Haar, OrthogonalAndGenericallyNeither) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const OrthogonalMap m = random_orthogonal(4, s);
        EXPECT_LT((m.matrix().transpose() * m.matrix() - RealMatrix::Identity(4, 4)).norm(), 1e-12);
        EXPECT_EQ(classify(m).kind, TransformKind::Neither);
        EXPECT_FALSE(gauge_invariance_probe(m, s).passed);
    }
}

TEST(Haar, TwoByTwoIsAlwaysTyped) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const OrthogonalMap m = random_orthogonal(2, s);
        const TransformKind k = classify(m).kind;
        EXPECT_NE(k, TransformKind::Neither);
        EXPECT_EQ(k == TransformKind::Type1, m.matrix().determinant() > 0.0);
    }
}

TEST(Haar, UnitaryIsUnitaryAndSeeded) {
    const UnitaryMap a = random_unitary(4, 9), b = random_unitary(4, 9);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_LT((a.matrix().adjoint() * a.matrix() - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
    EXPECT_LT((a.inverse().matrix() * a.matrix() - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(Haar, FirstEntryPhaseIsUniform) {
    // Mean of u_00^2 vanishes for Haar measure (phase uniform); biased QR would not.
    Complex acc = 0.0;
    const int n = 4000;
    for (int s = 0; s < n; ++s) acc += std::pow(random_unitary(2, static_cast<std::uint64_t>(s)).matrix()(0, 0), 2);
    EXPECT_LT(std::abs(acc) / n, 0.05);
}

TEST(Group, ClosureUnderComposition) {
    const OrthogonalMap a1(blocks_from(random_unitary(2, 1), 0)), b1(blocks_from(random_unitary(2, 2), 0));
    const OrthogonalMap a2(blocks_from(random_unitary(2, 3), 1)), b2(blocks_from(random_unitary(2, 4), 1));
    EXPECT_EQ(classify(a1.compose(b1)).kind, TransformKind::Type1);
    EXPECT_EQ(classify(a1.compose(a2)).kind, TransformKind::Type2);
    EXPECT_EQ(classify(a2.compose(a1)).kind, TransformKind::Type2);
    EXPECT_EQ(classify(a2.compose(b2)).kind, TransformKind::Type1);
}

TEST(Blocks, MixedReflectionsAreNotTyped) {
    const UnitaryMap u = random_unitary(2, 17);
    RealMatrix alpha(2, 2), phi(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            alpha(i, j) = std::abs(u.matrix()(i, j));
            phi(i, j) = std::arg(u.matrix()(i, j));
        }
    }
    const std::vector<int> betas{0, 1, 0, 0};
    const RealMatrix raw = assemble_blocks(alpha, phi, betas);
    bool typed = false;
    try {
        typed = classify(OrthogonalMap(raw)).kind != TransformKind::Neither;
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotOrthogonal);
    }
    EXPECT_FALSE(typed);
}

TEST(Metric, OrthogonalMapsPreserveDistances) {
    const OrthogonalMap m = random_orthogonal(6, 5);
    const RealState a = random_real_state(6, 1), b = random_real_state(6, 2);
    const RealState ma = m.apply(a), mb = m.apply(b);
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        d0 += (a[i] - b[i]) * (a[i] - b[i]);
        d1 += (ma[i] - mb[i]) * (ma[i] - mb[i]);
    }
    EXPECT_NEAR(d0, d1, 1e-14);
}

}  // namespace
}  // namespace infogeo

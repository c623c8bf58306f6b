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

#include "infogeo/rng.hpp"

namespace infogeo {
namespace {

TEST(Rng, ReproducibleStreams) {
    Rng a(123), b(123), c(124);
    for (int i = 0; i < 10; ++i) {
        const auto x = a(), y = b(), z = c();
        EXPECT_EQ(x, y);
        EXPECT_NE(x, z);
    }
}

TEST(Rng, SplitIsIndependentOfParentState) {
    Rng root(7);
    const Rng s1 = root.split(3);
    (void)root();
    Rng s2 = root.split(3);
    Rng s1c = s1;
    EXPECT_EQ(s1c(), s2());
    Rng other = Rng(7).split(4);
    EXPECT_NE(Rng(7).split(3)(), other());
}

TEST(Rng, NormalMoments) {
    Rng rng(99);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(Rng, UniformRangeAndBinomialMean) {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform(2.0, 3.0);
        EXPECT_GE(u, 2.0);
        EXPECT_LT(u, 3.0);
    }
    double mean = 0.0;
    for (int i = 0; i < 2000; ++i) mean += static_cast<double>(rng.binomial(100, 0.3));
    EXPECT_NEAR(mean / 2000, 30.0, 0.5);
    EXPECT_EQ(rng.binomial(10, 0.0), 0u);
    EXPECT_EQ(rng.binomial(10, 1.0), 10u);
}

}  // namespace
}  // namespace infogeo

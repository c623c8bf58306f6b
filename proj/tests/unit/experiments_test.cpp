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

#include "infogeo/experiments.hpp"

namespace infogeo {
namespace {

TEST(RunConfig, ParsesKeys) {
    RunConfig cfg;
    cfg.set("command", "metric-check");
    cfg.set("n", "4");
    cfg.set("seed", "0x10");
    cfg.set("p", "0.25,0.75");
    cfg.set("tol-override", "pullback=1e-3");
    cfg.set("tol.triangle_inequality", "2e-12");
    EXPECT_EQ(*cfg.n, 4u);
    EXPECT_EQ(*cfg.seed, 16u);
    EXPECT_EQ(cfg.p->size(), 2u);
    EXPECT_DOUBLE_EQ(cfg.tol_overrides.at("pullback"), 1e-3);
    EXPECT_DOUBLE_EQ(cfg.tol_overrides.at("triangle_inequality"), 2e-12);
}

TEST(RunConfig, RejectsGarbage) {
    RunConfig cfg;
    EXPECT_THROW(cfg.set("seed", "-1"), ConfigError);
    EXPECT_THROW(cfg.set("seed", "12abc"), ConfigError);
    EXPECT_THROW(cfg.set("frobnicate", "1"), ConfigError);
    EXPECT_THROW(cfg.set("tol-override", "novalue"), ConfigError);
    EXPECT_THROW(cfg.set("p", "0.5,x"), ConfigError);
}

TEST(Commands, SeedRequired) {
    RunConfig cfg;
    cfg.command = "born-check";
    EXPECT_THROW((void)run_command(cfg), ConfigError);
    cfg.command = "nonsense";
    cfg.seed = 1;
    EXPECT_THROW((void)run_command(cfg), ConfigError);
}

TEST(Commands, CoinWithoutTrialsNeedsNoSeed) {
    RunConfig cfg;
    cfg.command = "coin-distinguish";
    cfg.trials = 0;
    const Report r = run_command(cfg);
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.checks.empty());
}

TEST(Commands, IdenticalCoinsPass) {
    RunConfig cfg;
    cfg.command = "coin-distinguish";
    cfg.seed = 3;
    cfg.trials = 200;
    cfg.p = std::vector<double>{0.3, 0.7};
    cfg.p2 = std::vector<double>{0.3, 0.7};
    const Report r = run_command(cfg);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.front().name, "zero_gain");
}

TEST(Commands, ZeroToleranceFails) {
    RunConfig cfg;
    cfg.command = "metric-check";
    cfg.seed = 1;
    cfg.trials = 50;
    cfg.tol_overrides["pullback"] = 0.0;
    const Report r = run_command(cfg);
    EXPECT_FALSE(r.passed());
    cfg.tol_overrides = {{"no_such_check", 1.0}};
    EXPECT_THROW((void)run_command(cfg), ConfigError);
}

TEST(Commands, ReportsAreDeterministic) {
    RunConfig cfg;
    cfg.command = "born-check";
    cfg.seed = 11;
    cfg.trials = 10;
    cfg.shots = 1000;
    Report a = run_command(cfg), b = run_command(cfg);
    a.duration_seconds = b.duration_seconds = 0.0;
    EXPECT_EQ(to_json_string(a), to_json_string(b));
    EXPECT_EQ(to_csv(a), to_csv(b));
}

TEST(Commands, DegenerateCorrespondence) {
    RunConfig cfg;
    cfg.command = "correspondence";
    cfg.seed = 2;
    cfg.n = 1;
    cfg.trials = 20;
    const Report r = run_command(cfg);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.metrics.at("degenerate").get<bool>());
}

TEST(Report, JsonAndCsvShape) {
    Report r;
    r.command = "x";
    r.config = Json{{"seed", 1}};
    r.checks.push_back(make_check("a", 0.1, 0.0, 0.2, Comparison::AtMost));
    r.checks.push_back(make_check("b", NAN, 0.0, 1.0, Comparison::AtMost));
    EXPECT_FALSE(r.checks[1].passed);
    EXPECT_FALSE(r.passed());
    const Json j = to_json(r);
    EXPECT_EQ(j.at("overall").get<std::string>(), "fail");
    EXPECT_EQ(j.at("checks").size(), 2u);
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "command,name,measured,target,tolerance,comparison,passed,detail");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Report, MatrixJsonRoundTrip) {
    RealMatrix m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    EXPECT_EQ(real_matrix_from_json(matrix_to_json(m)), m);
    ComplexMatrix c(1, 2);
    c << Complex(1, 2), Complex(-3, 0.5);
    EXPECT_EQ(complex_matrix_from_json(matrix_to_json(c)), c);
}

TEST(Comparison, Semantics) {
    EXPECT_TRUE(make_check("x", 3.0, 2.7, 0.0, Comparison::AtLeast).passed);
    EXPECT_FALSE(make_check("x", 2.6, 2.7, 0.0, Comparison::AtLeast).passed);
    EXPECT_TRUE(make_check("x", 2.0 + 1e-10, 2.0, 1e-9, Comparison::Near).passed);
    EXPECT_FALSE(make_check("x", 1.0, 0.0, 0.5, Comparison::AtMost).passed);
}

}  // namespace
}  // namespace infogeo

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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infogeo/bayes.hpp"
#include "infogeo/distmax.hpp"
#include "infogeo/measurement.hpp"
#include "json.hpp"

namespace infogeo {

using Json = nlohmann::ordered_json;

enum class Comparison {
    AtMost,   // measured <= target + tolerance (target is usually 0)
    AtLeast,  // measured >= target - tolerance
    Near,     // |measured - target| <= tolerance
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::AtMost;
    bool passed = false;
    std::string detail;
};

CheckResult make_check(std::string name, double measured, double target, double tolerance,
                       Comparison cmp, std::string detail = {});

struct Report {
    std::string command;
    Json config;
    std::vector<CheckResult> checks;
    Json metrics = Json::object();
    double duration_seconds = 0.0;

    [[nodiscard]] bool passed() const;
};

Json to_json(const Report &r);
std::string to_json_string(const Report &r);
/// One row per check: command,name,measured,target,tolerance,comparison,passed,detail.
std::string to_csv(const Report &r);

/// Formats with 17 significant digits.
std::string format_double(double x);

Json matrix_to_json(const RealMatrix &m);
RealMatrix real_matrix_from_json(const Json &j);
Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const Json &j);
Json state_to_json(const ComplexState &v);
Json record_to_json(const MeasurementRecord &rec);
Json distinguishability_to_json(const DistinguishabilityResult &r);
Json monte_carlo_to_json(const MonteCarloSummary &s);

/// "outcome,count" rows.
std::string counts_to_csv(std::span<const std::uint64_t> counts);

}  // namespace infogeo

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
#include <string>
#include <vector>

#include "infogeo/report.hpp"

namespace infogeo {

/// Raised for unusable run configurations (maps to exit code 2 in the CLI).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;                    // coin-distinguish, metric-check, ...
    std::optional<std::size_t> n;           // outcome dimension N
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> budget;
    std::optional<double> delta;            // coin-distinguish: p2 = p + delta (e_1 - e_2)
    std::optional<std::vector<double>> p;   // coin-distinguish coin A
    std::optional<std::vector<double>> p2;  // coin-distinguish coin B
    std::map<std::string, double> tol_overrides;

    /// Applies `key=value` style settings; throws ConfigError on bad input.
    void set(const std::string &key, const std::string &value);

    [[nodiscard]] Json to_json() const;
};

const std::vector<std::string> &command_names();

/// Runs one subcommand (or "all") and returns its report. Throws ConfigError
/// for invalid configurations, including unknown tolerance override names.
Report run_command(const RunConfig &cfg);

Report cmd_coin_distinguish(const RunConfig &cfg);
Report cmd_metric_check(const RunConfig &cfg);
Report cmd_correspondence(const RunConfig &cfg);
Report cmd_born_check(const RunConfig &cfg);
Report cmd_wootters(const RunConfig &cfg);
Report cmd_all(const RunConfig &cfg);

/// Exact expectation over multinomial datasets of U(1/2,1/2) - U(posterior),
/// by enumerating counts of outcome groups with equal likelihood ratio.
/// Returns nullopt when more than `max_terms` compositions would be needed.
std::optional<double> expected_gain_by_enumeration(const CoinExperiment &exp,
                                                   std::uint64_t max_terms = 20'000'000,
                                                   const EntropyFn &u = EntropyFn::shannon());

}  // namespace infogeo

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

// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infogeo/infogeo.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct Options {
    std::optional<std::uint64_t> n, seed, trials, shots, budget;
    std::optional<double> delta;
    std::string p, p2;
    std::vector<std::string> overrides;
    std::string out;
    std::string format = "json";
    bool quiet = false;
};

struct ConfigDeleter {
    void operator()(ig_config *c) const { ig_config_destroy(c); }
};
struct ReportDeleter {
    void operator()(ig_report *r) const { ig_report_destroy(r); }
};

int config_error(const std::string &msg) {
    std::cerr << "infogeo: " << msg << "\n";
    return kExitConfig;
}

int run(const std::string &command, const Options &opt) {
    ig_config *raw = nullptr;
    if (ig_config_create(command.c_str(), &raw) != IG_OK) return config_error(ig_last_error());
    std::unique_ptr<ig_config, ConfigDeleter> cfg(raw);

    std::vector<std::pair<std::string, std::string>> kv;
    auto put = [&](const char *key, const auto &value) {
        if (value) kv.emplace_back(key, std::to_string(*value));
    };
    put("n", opt.n);
    put("seed", opt.seed);
    put("trials", opt.trials);
    put("shots", opt.shots);
    put("budget", opt.budget);
    if (opt.delta) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *opt.delta);
        kv.emplace_back("delta", buf);
    }
    if (!opt.p.empty()) kv.emplace_back("p", opt.p);
    if (!opt.p2.empty()) kv.emplace_back("p2", opt.p2);
    for (const auto &o : opt.overrides) kv.emplace_back("tol-override", o);
    for (const auto &[k, v] : kv) {
        if (ig_config_set(cfg.get(), k.c_str(), v.c_str()) != IG_OK) return config_error(ig_last_error());
    }

    ig_report *rep_raw = nullptr;
    const ig_status st = ig_run(cfg.get(), &rep_raw);
    if (st == IG_ERR_CONFIG || st == IG_ERR_INVALID_ARGUMENT) return config_error(ig_last_error());
    if (st != IG_OK) {
        std::cerr << "infogeo: " << ig_status_name(st) << ": " << ig_last_error() << "\n";
        return kExitConfig;
    }
    std::unique_ptr<ig_report, ReportDeleter> report(rep_raw);

    char *text = nullptr;
    const ig_format fmt = opt.format == "csv" ? IG_FORMAT_CSV : IG_FORMAT_JSON;
    if (ig_report_serialize(report.get(), fmt, &text) != IG_OK) return config_error(ig_last_error());
    const std::string body(text);
    ig_string_free(text);

    if (opt.out.empty()) {
        std::cout << body;
        if (fmt == IG_FORMAT_JSON) std::cout << "\n";
    } else {
        std::ofstream f(opt.out);
        if (!f) return config_error("cannot write " + opt.out);
        f << body;
        if (fmt == IG_FORMAT_JSON) f << "\n";
    }

    if (!opt.quiet) {
        const std::size_t count = ig_report_check_count(report.get());
        for (std::size_t i = 0; i < count; ++i) {
            const char *name = nullptr;
            double measured = 0.0, tol = 0.0;
            int ok = 0;
            ig_report_check(report.get(), i, &name, &measured, &tol, &ok);
            std::fprintf(stderr, "%-4s %-40s measured=%.6g tol=%.3g\n", ok ? "ok" : "FAIL", name, measured, tol);
        }
    }
    return ig_report_passed(report.get()) ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Information-geometric checks for coins, state spaces and measurements"};
    app.set_version_flag("--version", std::string(ig_version()));
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, std::string> commands{
        {"coin-distinguish", "Bayesian information gain when telling two coins apart"},
        {"metric-check", "Fisher metric, statistical distance and gauge identities"},
        {"correspondence", "Classify orthogonal maps against unitary/antiunitary maps"},
        {"born-check", "Measurement model, Born rule and reproducibility"},
        {"wootters", "Maximize measured statistical distance over measurements"},
        {"all", "Run every command and merge the reports"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--n", opt.n, "Number of outcomes N");
        sub->add_option("--seed", opt.seed, "Seed for all random draws");
        sub->add_option("--trials", opt.trials, "Trials, samples or pairs, depending on the command");
        sub->add_option("--shots", opt.shots, "Measurement shots (born-check)");
        sub->add_option("--budget", opt.budget, "Optimizer restarts (wootters)");
        sub->add_option("--delta", opt.delta, "Coin B = coin A + delta (e1 - e2) (coin-distinguish)");
        sub->add_option("--p", opt.p, "Coin A as comma-separated probabilities");
        sub->add_option("--p2", opt.p2, "Coin B as comma-separated probabilities");
        sub->add_option("--tol-override", opt.overrides, "Replace a check tolerance: name=value")
            ->allow_extra_args(false);
        sub->add_option("--out", opt.out, "Write the report to this file instead of stdout");
        sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--quiet", opt.quiet, "Suppress the per-check summary on stderr");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }
    for (const auto &[name, help] : commands) {
        if (app.got_subcommand(name)) return run(name, opt);
    }
    return kExitConfig;
}

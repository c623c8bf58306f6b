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

#include "infogeo/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "infogeo/error.hpp"

namespace infogeo {

namespace {

const char *comparison_name(Comparison c) {
    switch (c) {
    case Comparison::AtMost: return "at_most";
    case Comparison::AtLeast: return "at_least";
    case Comparison::Near: return "near";
    }
    return "at_most";
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CheckResult make_check(std::string name, double measured, double target, double tolerance,
                       Comparison cmp, std::string detail) {
    CheckResult c{std::move(name), measured, target, tolerance, cmp, false, std::move(detail)};
    switch (cmp) {
    case Comparison::AtMost: c.passed = measured <= target + tolerance; break;
    case Comparison::AtLeast: c.passed = measured >= target - tolerance; break;
    case Comparison::Near: c.passed = std::abs(measured - target) <= tolerance; break;
    }
    // NaN never passes.
    if (std::isnan(measured)) c.passed = false;
    return c;
}

bool Report::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

Json to_json(const Report &r) {
    Json j;
    j["schema"] = "infogeo.report/1";
    j["command"] = r.command;
    j["config"] = r.config;
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        Json row;
        row["name"] = c.name;
        // Non-finite values have no JSON literal; emit them as strings.
        row["measured"] = std::isfinite(c.measured) ? Json(c.measured) : Json(format_double(c.measured));
        row["target"] = c.target;
        row["tolerance"] = c.tolerance;
        row["comparison"] = comparison_name(c.comparison);
        row["passed"] = c.passed;
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["metrics"] = r.metrics;
    j["overall"] = r.passed() ? "pass" : "fail";
    j["duration_seconds"] = r.duration_seconds;
    return j;
}

std::string to_json_string(const Report &r) { return to_json(r).dump(2) + "\n"; }

std::string to_csv(const Report &r) {
    std::ostringstream os;
    os << "command,name,measured,target,tolerance,comparison,passed,detail\n";
    for (const auto &c : r.checks) {
        os << csv_escape(r.command) << ',' << csv_escape(c.name) << ',' << format_double(c.measured)
           << ',' << format_double(c.target) << ',' << format_double(c.tolerance) << ','
           << comparison_name(c.comparison) << ',' << (c.passed ? "true" : "false") << ','
           << csv_escape(c.detail) << '\n';
    }
    return os.str();
}

Json matrix_to_json(const RealMatrix &m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
    }
    j["data"] = std::move(data);
    return j;
}

RealMatrix real_matrix_from_json(const Json &j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const Json &data = j.at("data");
    if (rows < 0 || cols < 0 || data.size() != static_cast<std::size_t>(rows * cols)) {
        throw Error(ErrorCode::DimensionMismatch, "matrix data does not match its header");
    }
    RealMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)].get<double>();
    }
    return m;
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

ComplexMatrix complex_matrix_from_json(const Json &j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const Json &re = j.at("re");
    const Json &im = j.at("im");
    const auto count = static_cast<std::size_t>(rows * cols);
    if (rows < 0 || cols < 0 || re.size() != count || im.size() != count) {
        throw Error(ErrorCode::DimensionMismatch, "matrix data does not match its header");
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto k = static_cast<std::size_t>(r * cols + c);
            m(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
        }
    }
    return m;
}

Json state_to_json(const ComplexState &v) {
    Json re = Json::array(), im = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        re.push_back(v[i].real());
        im.push_back(v[i].imag());
    }
    return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json record_to_json(const MeasurementRecord &rec) {
    return Json{{"outcome", rec.outcome},
                {"probability", rec.probability},
                {"output_state", state_to_json(rec.output_state)}};
}

Json distinguishability_to_json(const DistinguishabilityResult &r) {
    return Json{{"max_ds", r.max_ds},
                {"hilbert_distance", r.hilbert_distance},
                {"gap", r.gap},
                {"evaluations", r.evaluations},
                {"argmax_measurement", matrix_to_json(r.argmax_measurement.pre_interaction().matrix())}};
}

Json monte_carlo_to_json(const MonteCarloSummary &s) {
    return Json{{"trials", s.trials},
                {"mean_gain", s.mean_gain},
                {"std_error", s.std_error},
                {"mean_post_a", s.mean_post_a},
                {"post_a_std_error", s.post_a_std_error}};
}

std::string counts_to_csv(std::span<const std::uint64_t> counts) {
    std::ostringstream os;
    os << "outcome,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) os << i << ',' << counts[i] << '\n';
    return os.str();
}

}  // namespace infogeo

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

#include "infogeo/infogeo.h"

#include <cstring>
#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "infogeo/bayes.hpp"
#include "infogeo/distmax.hpp"
#include "infogeo/error.hpp"
#include "infogeo/experiments.hpp"
#include "infogeo/measurement.hpp"
#include "infogeo/report.hpp"
#include "infogeo/rng.hpp"
#include "infogeo/simplex.hpp"
#include "infogeo/transforms.hpp"

struct ig_orthogonal {
    infogeo::OrthogonalMap map;
};

struct ig_measurement {
    infogeo::Measurement meas;
};

struct ig_config {
    infogeo::RunConfig cfg;
};

struct ig_report {
    infogeo::Report report;
};

namespace {

thread_local std::string last_error;

ig_status fail(ig_status s, const std::string &msg) {
    last_error = msg;
    return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
ig_status guarded(Fn &&fn) {
    try {
        fn();
        last_error.clear();
        return IG_OK;
    } catch (const infogeo::Error &e) {
        return fail(static_cast<ig_status>(static_cast<int>(e.code())), e.what());
    } catch (const infogeo::ConfigError &e) {
        return fail(IG_ERR_CONFIG, e.what());
    } catch (const std::bad_alloc &) {
        return fail(IG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(IG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(IG_ERR_INTERNAL, "unknown failure");
    }
}

#define IG_REQUIRE(cond)                                                       \
    do {                                                                       \
        if (!(cond)) return fail(IG_ERR_INVALID_ARGUMENT, "null or empty argument: " #cond); \
    } while (0)

std::vector<double> copy(const double *x, std::size_t n) { return {x, x + n}; }

infogeo::ComplexState read_state(const double *x, std::size_t n) {
    std::vector<infogeo::Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = {x[2 * i], x[2 * i + 1]};
    return infogeo::ComplexState(std::move(v));
}

void write_state(const infogeo::ComplexState &v, double *out) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
}

infogeo::ComplexMatrix read_complex_matrix(const double *x, std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    infogeo::ComplexMatrix m(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
            const std::size_t at = 2 * static_cast<std::size_t>(r * k + c);
            m(r, c) = {x[at], x[at + 1]};
        }
    }
    return m;
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char *ig_last_error(void) { return last_error.c_str(); }

const char *ig_status_name(ig_status status) {
    switch (status) {
        case IG_OK: return "ok";
        case IG_ERR_CONFIG: return "config_error";
        case IG_ERR_IO: return "io_error";
        case IG_ERR_INTERNAL: return "internal_error";
        default: break;
    }
    const int code = static_cast<int>(status);
    if (code >= 1 && code <= static_cast<int>(infogeo::ErrorCode::ImpossibleOutcome)) {
        return infogeo::error_code_name(static_cast<infogeo::ErrorCode>(code)).data();
    }
    return "unknown";
}

const char *ig_version(void) { return "0.1.0"; }

ig_status ig_fisher_quadratic(const double *p, const double *dp, size_t n, double *out) {
    IG_REQUIRE(p && dp && out);
    return guarded([&] {
        *out = infogeo::fisher_quadratic(infogeo::ProbDist(copy(p, n)), infogeo::TangentVec(copy(dp, n)));
    });
}

ig_status ig_statistical_distance(const double *p, const double *p2, size_t n, double *out) {
    IG_REQUIRE(p && p2 && out);
    return guarded([&] {
        *out = infogeo::statistical_distance(infogeo::ProbDist(copy(p, n)), infogeo::ProbDist(copy(p2, n)));
    });
}

ig_status ig_kl_divergence(const double *p, const double *p2, size_t n, double *out) {
    IG_REQUIRE(p && p2 && out);
    return guarded([&] {
        *out = infogeo::kl_divergence(infogeo::ProbDist(copy(p, n)), infogeo::ProbDist(copy(p2, n)));
    });
}

ig_status ig_info_gain(const double *p, const double *p2, size_t n, uint64_t tosses, double *exact,
                       double *approx) {
    IG_REQUIRE(p && p2 && exact && approx);
    return guarded([&] {
        const infogeo::CoinExperiment exp(infogeo::ProbDist(copy(p, n)), infogeo::ProbDist(copy(p2, n)), tosses);
        *exact = infogeo::info_gain_exact(exp);
        *approx = infogeo::info_gain_approx(exp);
    });
}

ig_status ig_posterior(const double *p, const double *p2, size_t n, const uint64_t *counts, double *post_a) {
    IG_REQUIRE(p && p2 && counts && post_a);
    return guarded([&] {
        const uint64_t tosses = std::accumulate(counts, counts + n, uint64_t{0});
        const infogeo::CoinExperiment exp(infogeo::ProbDist(copy(p, n)), infogeo::ProbDist(copy(p2, n)), tosses);
        *post_a = infogeo::exact_posterior(exp, std::span<const uint64_t>(counts, n)).post_a;
    });
}

ig_status ig_hilbert_distance(const double *u, const double *v, size_t n, double *out) {
    IG_REQUIRE(u && v && out && n > 0);
    return guarded([&] { *out = infogeo::hilbert_distance(read_state(u, n), read_state(v, n)); });
}

ig_status ig_orthogonal_create(const double *m, size_t dim, ig_orthogonal **out) {
    IG_REQUIRE(m && out && dim > 0);
    *out = nullptr;
    return guarded([&] {
        const auto k = static_cast<Eigen::Index>(dim);
        infogeo::RealMatrix mat(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) mat(r, c) = m[r * k + c];
        }
        *out = new ig_orthogonal{infogeo::OrthogonalMap(std::move(mat))};
    });
}

ig_status ig_orthogonal_random(size_t dim, uint64_t seed, ig_orthogonal **out) {
    IG_REQUIRE(out && dim > 0);
    *out = nullptr;
    return guarded([&] { *out = new ig_orthogonal{infogeo::random_orthogonal(dim, seed)}; });
}

ig_status ig_orthogonal_from_unitary(const double *u, size_t n, ig_orthogonal **out) {
    IG_REQUIRE(u && out && n > 0);
    *out = nullptr;
    return guarded([&] {
        *out = new ig_orthogonal{infogeo::from_unitary(infogeo::UnitaryMap(read_complex_matrix(u, n)))};
    });
}

size_t ig_orthogonal_dim(const ig_orthogonal *m) { return m ? m->map.dim() : 0; }

ig_status ig_orthogonal_classify(const ig_orthogonal *m, ig_kind *kind) {
    IG_REQUIRE(m && kind);
    return guarded([&] { *kind = static_cast<ig_kind>(static_cast<int>(infogeo::classify(m->map).kind)); });
}

ig_status ig_orthogonal_to_unitary(const ig_orthogonal *m, double *u) {
    IG_REQUIRE(m && u);
    return guarded([&] {
        const infogeo::ComplexMatrix mat = infogeo::to_unitary(m->map).matrix();
        for (Eigen::Index r = 0; r < mat.rows(); ++r) {
            for (Eigen::Index c = 0; c < mat.cols(); ++c) {
                const std::size_t at = 2 * static_cast<std::size_t>(r * mat.cols() + c);
                u[at] = mat(r, c).real();
                u[at + 1] = mat(r, c).imag();
            }
        }
    });
}

ig_status ig_orthogonal_apply(const ig_orthogonal *m, const double *q, double *out) {
    IG_REQUIRE(m && q && out);
    return guarded([&] {
        const infogeo::RealState r = m->map.apply(infogeo::RealState(copy(q, m->map.dim())));
        std::copy(r.vec().begin(), r.vec().end(), out);
    });
}

ig_status ig_orthogonal_gauge_probe(const ig_orthogonal *m, uint64_t seed, int *passed, double *max_deviation) {
    IG_REQUIRE(m && passed && max_deviation);
    return guarded([&] {
        const infogeo::ProbeResult r = infogeo::gauge_invariance_probe(m->map, seed);
        *passed = r.passed ? 1 : 0;
        *max_deviation = r.max_deviation;
    });
}

void ig_orthogonal_destroy(ig_orthogonal *m) { delete m; }

ig_status ig_measurement_create(const double *u, size_t n, const double *phases, ig_measurement **out) {
    IG_REQUIRE(u && out && n > 0);
    *out = nullptr;
    return guarded([&] {
        std::vector<double> ph = phases ? copy(phases, n) : std::vector<double>{};
        *out = new ig_measurement{infogeo::Measurement(infogeo::UnitaryMap(read_complex_matrix(u, n)), std::move(ph))};
    });
}

size_t ig_measurement_outcomes(const ig_measurement *m) { return m ? m->meas.outcomes() : 0; }

ig_status ig_measurement_distribution(const ig_measurement *m, const double *v, double *probs) {
    IG_REQUIRE(m && v && probs);
    return guarded([&] {
        const infogeo::ProbDist p = infogeo::outcome_distribution(m->meas, read_state(v, m->meas.outcomes()));
        std::copy(p.vec().begin(), p.vec().end(), probs);
    });
}

ig_status ig_measurement_apply(const ig_measurement *m, const double *v, int64_t forced, uint64_t seed,
                               size_t *outcome, double *probability, double *output_state) {
    IG_REQUIRE(m && v && outcome && probability && output_state);
    return guarded([&] {
        const infogeo::ComplexState state = read_state(v, m->meas.outcomes());
        infogeo::MeasurementRecord rec = [&] {
            if (forced >= 0) return infogeo::apply_measurement(m->meas, state, static_cast<std::size_t>(forced));
            infogeo::Rng rng(seed);
            return infogeo::apply_measurement(m->meas, state, rng);
        }();
        *outcome = rec.outcome;
        *probability = rec.probability;
        write_state(rec.output_state, output_state);
    });
}

ig_status ig_measurement_sample(const ig_measurement *m, const double *v, uint64_t shots, uint64_t seed,
                                uint64_t *counts) {
    IG_REQUIRE(m && v && counts);
    return guarded([&] {
        const auto c = infogeo::sample_outcomes(m->meas, read_state(v, m->meas.outcomes()), shots, seed);
        std::copy(c.begin(), c.end(), counts);
    });
}

void ig_measurement_destroy(ig_measurement *m) { delete m; }

ig_status ig_wootters_maximize(const double *u, const double *v, size_t n, size_t budget, uint64_t seed,
                               double *max_ds, double *hilbert) {
    IG_REQUIRE(u && v && max_ds && hilbert && n > 0);
    return guarded([&] {
        const auto r = infogeo::maximize_statistical_distance(read_state(u, n), read_state(v, n), budget, seed);
        *max_ds = r.max_ds;
        *hilbert = r.hilbert_distance;
    });
}

ig_status ig_config_create(const char *command, ig_config **out) {
    IG_REQUIRE(command && out);
    *out = nullptr;
    return guarded([&] {
        auto cfg = std::make_unique<ig_config>();
        cfg->cfg.command = command;
        const auto &names = infogeo::command_names();
        if (std::find(names.begin(), names.end(), cfg->cfg.command) == names.end()) {
            throw infogeo::ConfigError(std::string("unknown command '") + command + "'");
        }
        *out = cfg.release();
    });
}

ig_status ig_config_set(ig_config *cfg, const char *key, const char *value) {
    IG_REQUIRE(cfg && key && value);
    return guarded([&] { cfg->cfg.set(key, value); });
}

void ig_config_destroy(ig_config *cfg) { delete cfg; }

ig_status ig_run(const ig_config *cfg, ig_report **out) {
    IG_REQUIRE(cfg && out);
    *out = nullptr;
    return guarded([&] { *out = new ig_report{infogeo::run_command(cfg->cfg)}; });
}

int ig_report_passed(const ig_report *r) { return r && r->report.passed() ? 1 : 0; }

size_t ig_report_check_count(const ig_report *r) { return r ? r->report.checks.size() : 0; }

ig_status ig_report_check(const ig_report *r, size_t index, const char **name, double *measured,
                          double *tolerance, int *passed) {
    IG_REQUIRE(r);
    if (index >= r->report.checks.size()) return fail(IG_ERR_INVALID_ARGUMENT, "check index out of range");
    const infogeo::CheckResult &c = r->report.checks[index];
    if (name) *name = c.name.c_str();
    if (measured) *measured = c.measured;
    if (tolerance) *tolerance = c.tolerance;
    if (passed) *passed = c.passed ? 1 : 0;
    return IG_OK;
}

ig_status ig_report_serialize(const ig_report *r, ig_format format, char **out) {
    IG_REQUIRE(r && out);
    *out = nullptr;
    if (format != IG_FORMAT_JSON && format != IG_FORMAT_CSV) return fail(IG_ERR_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        *out = dup_string(format == IG_FORMAT_JSON ? infogeo::to_json_string(r->report) : infogeo::to_csv(r->report));
    });
}

void ig_report_destroy(ig_report *r) { delete r; }

void ig_string_free(char *s) { std::free(s); }

}  // extern "C"

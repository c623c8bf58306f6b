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

#ifndef INFOGEO_INFOGEO_H
#define INFOGEO_INFOGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(IG_BUILDING_LIBRARY)
#define IG_API __attribute__((visibility("default")))
#else
#define IG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 1..11 mirror the core error taxonomy. */
typedef enum ig_status {
    IG_OK = 0,
    IG_ERR_INVALID_ARGUMENT = 1,
    IG_ERR_DIMENSION_MISMATCH = 2,
    IG_ERR_SINGULAR_METRIC = 3,
    IG_ERR_ABSOLUTE_CONTINUITY = 4,
    IG_ERR_ZERO_LIKELIHOOD_BOTH = 5,
    IG_ERR_ODD_DIMENSION = 6,
    IG_ERR_EMPTY_GRID = 7,
    IG_ERR_NOT_ORTHOGONAL = 8,
    IG_ERR_NOT_UNITARY = 9,
    IG_ERR_WRONG_TYPE = 10,
    IG_ERR_IMPOSSIBLE_OUTCOME = 11,
    IG_ERR_CONFIG = 20,
    IG_ERR_IO = 21,
    IG_ERR_INTERNAL = 99
} ig_status;

typedef enum ig_kind { IG_TYPE1 = 0, IG_TYPE2 = 1, IG_NEITHER = 2 } ig_kind;

typedef enum ig_format { IG_FORMAT_JSON = 0, IG_FORMAT_CSV = 1 } ig_format;

typedef struct ig_orthogonal ig_orthogonal;
typedef struct ig_measurement ig_measurement;
typedef struct ig_config ig_config;
typedef struct ig_report ig_report;

/* Message for the last failure on the calling thread; never NULL. */
IG_API const char *ig_last_error(void);
IG_API const char *ig_status_name(ig_status status);
IG_API const char *ig_version(void);

/* Complex vectors and matrices are interleaved (re, im) doubles; matrices
   are row-major. */

/* Probability simplex. */
IG_API ig_status ig_fisher_quadratic(const double *p, const double *dp, size_t n, double *out);
IG_API ig_status ig_statistical_distance(const double *p, const double *p2, size_t n, double *out);
IG_API ig_status ig_kl_divergence(const double *p, const double *p2, size_t n, double *out);

/* Information gain for n tosses between two coins: exact and small-signal. */
IG_API ig_status ig_info_gain(const double *p, const double *p2, size_t n, uint64_t tosses,
                              double *exact, double *approx);
/* Posterior of coin A after the given counts under an even prior. */
IG_API ig_status ig_posterior(const double *p, const double *p2, size_t n, const uint64_t *counts,
                              double *post_a);

/* Hilbert-space angle between unit complex vectors of length n. */
IG_API ig_status ig_hilbert_distance(const double *u, const double *v, size_t n, double *out);

/* Orthogonal maps on R^{2n}. */
IG_API ig_status ig_orthogonal_create(const double *m, size_t dim, ig_orthogonal **out);
IG_API ig_status ig_orthogonal_random(size_t dim, uint64_t seed, ig_orthogonal **out);
IG_API ig_status ig_orthogonal_from_unitary(const double *u, size_t n, ig_orthogonal **out);
IG_API size_t ig_orthogonal_dim(const ig_orthogonal *m);
IG_API ig_status ig_orthogonal_classify(const ig_orthogonal *m, ig_kind *kind);
/* Writes the n x n unitary of a Type1 map into u (2 n^2 doubles). */
IG_API ig_status ig_orthogonal_to_unitary(const ig_orthogonal *m, double *u);
IG_API ig_status ig_orthogonal_apply(const ig_orthogonal *m, const double *q, double *out);
IG_API ig_status ig_orthogonal_gauge_probe(const ig_orthogonal *m, uint64_t seed, int *passed,
                                           double *max_deviation);
IG_API void ig_orthogonal_destroy(ig_orthogonal *m);

/* Measurements: pre-interaction unitary plus optional phases (may be NULL). */
IG_API ig_status ig_measurement_create(const double *u, size_t n, const double *phases,
                                       ig_measurement **out);
IG_API size_t ig_measurement_outcomes(const ig_measurement *m);
IG_API ig_status ig_measurement_distribution(const ig_measurement *m, const double *v, double *probs);
/* Applies the measurement; outcome is sampled from seed unless forced >= 0. */
IG_API ig_status ig_measurement_apply(const ig_measurement *m, const double *v, int64_t forced,
                                      uint64_t seed, size_t *outcome, double *probability,
                                      double *output_state);
IG_API ig_status ig_measurement_sample(const ig_measurement *m, const double *v, uint64_t shots,
                                       uint64_t seed, uint64_t *counts);
IG_API void ig_measurement_destroy(ig_measurement *m);

/* Best measured statistical distance for a pair of states. */
IG_API ig_status ig_wootters_maximize(const double *u, const double *v, size_t n, size_t budget,
                                      uint64_t seed, double *max_ds, double *hilbert);

/* Experiment runner. */
IG_API ig_status ig_config_create(const char *command, ig_config **out);
IG_API ig_status ig_config_set(ig_config *cfg, const char *key, const char *value);
IG_API void ig_config_destroy(ig_config *cfg);
IG_API ig_status ig_run(const ig_config *cfg, ig_report **out);

IG_API int ig_report_passed(const ig_report *r);
IG_API size_t ig_report_check_count(const ig_report *r);
IG_API ig_status ig_report_check(const ig_report *r, size_t index, const char **name,
                                 double *measured, double *tolerance, int *passed);
/* Caller releases the string with ig_string_free. */
IG_API ig_status ig_report_serialize(const ig_report *r, ig_format format, char **out);
IG_API void ig_report_destroy(ig_report *r);
IG_API void ig_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* INFOGEO_INFOGEO_H */

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

#include "infogeo/distmax.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "infogeo/error.hpp"

namespace infogeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinStep = 1e-8;

void require_same_size(const ComplexState &u, const ComplexState &v) {
    if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "states differ in dimension");
}

// Statistical distance between |(W u)_i|^2 and |(W v)_i|^2, evaluated without
// constructing validated types in the inner loop.
double objective(const ComplexMatrix &w, const Eigen::VectorXcd &u, const Eigen::VectorXcd &v) {
    const Eigen::VectorXcd wu = w * u;
    const Eigen::VectorXcd wv = w * v;
    double chord2 = 0.0;
    for (Eigen::Index i = 0; i < wu.size(); ++i) {
        const double d = std::abs(wu(i)) - std::abs(wv(i));
        chord2 += d * d;
    }
    return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
}

ComplexMatrix givens_matrix(std::size_t n, std::span<const double> params) {
    const auto k = static_cast<Eigen::Index>(n);
    ComplexMatrix w = ComplexMatrix::Identity(k, k);
    std::size_t idx = 0;
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = a + 1; b < k; ++b) {
            const double angle = params[idx++];
            const double phase = params[idx++];
            const double c = std::cos(angle), s = std::sin(angle);
            const Complex e = std::polar(1.0, phase);
            // Left-multiply by the rotation acting on rows a and b.
            for (Eigen::Index col = 0; col < k; ++col) {
                const Complex ra = w(a, col), rb = w(b, col);
                w(a, col) = c * ra - s * std::conj(e) * rb;
                w(b, col) = s * e * ra + c * rb;
            }
        }
    }
    for (Eigen::Index a = 0; a < k; ++a) w.row(a) *= std::polar(1.0, params[idx++]);
    return w;
}

Eigen::VectorXcd as_vector(const ComplexState &s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.vec().data(), static_cast<Eigen::Index>(s.size()));
}

}  // namespace

double hilbert_distance(const ComplexState &u, const ComplexState &v) {
    require_same_size(u, v);
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) overlap += std::conj(u[i]) * v[i];
    const double mag = std::abs(overlap);
    if (mag == 0.0) return std::numbers::pi / 2;
    // Chord between u and the phase-aligned v: |u - c v| = 2 sin(d/2).
    const Complex align = std::conj(overlap) / mag;
    double chord2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) chord2 += std::norm(u[i] - align * v[i]);
    return std::min(2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2))), std::numbers::pi / 2);
}

double measured_distance(const Measurement &meas, const ComplexState &u, const ComplexState &v) {
    return statistical_distance(outcome_distribution(meas, u), outcome_distribution(meas, v));
}

std::size_t givens_parameter_count(std::size_t n) { return n * n; }

UnitaryMap givens_unitary(std::size_t n, std::span<const double> params) {
    if (params.size() != givens_parameter_count(n)) {
        throw Error(ErrorCode::DimensionMismatch, "expected n^2 parameters");
    }
    return UnitaryMap(givens_matrix(n, params));
}

DistinguishabilityResult maximize_statistical_distance(const ComplexState &u, const ComplexState &v,
                                                       std::size_t budget, std::uint64_t seed) {
    require_same_size(u, v);
    if (budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
    const std::size_t n = u.size();
    const std::size_t dim = givens_parameter_count(n);
    const Eigen::VectorXcd uu = as_vector(u), vv = as_vector(v);

    std::size_t evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        return objective(givens_matrix(n, x), uu, vv);
    };

    std::vector<double> best_x(dim, 0.0);
    double best = -1.0;
    const Rng root(seed);
    for (std::size_t r = 0; r < budget; ++r) {
        Rng rng = root.split(r);
        std::vector<double> x(dim);
        for (double &xi : x) xi = rng.uniform(0.0, kTwoPi);
        double fx = eval(x);
        double step = 0.5;
        while (step >= kMinStep) {
            bool improved = false;
            for (std::size_t i = 0; i < dim; ++i) {
                for (double sign : {1.0, -1.0}) {
                    const double old = x[i];
                    x[i] = old + sign * step;
                    const double f = eval(x);
                    if (f > fx) {
                        fx = f;
                        improved = true;
                        break;
                    }
                    x[i] = old;
                }
            }
            if (!improved) step *= 0.5;
        }
        if (fx > best) {
            best = fx;
            best_x = x;
        }
    }

    DistinguishabilityResult res{std::min(best, std::numbers::pi / 2),
                                 Measurement(givens_unitary(n, best_x)), hilbert_distance(u, v), 0.0,
                                 evaluations};
    res.gap = std::abs(res.max_ds - res.hilbert_distance);
    return res;
}

double certify_upper_bound(const ComplexState &u, const ComplexState &v, std::size_t samples,
                           std::uint64_t seed) {
    require_same_size(u, v);
    if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
    const Eigen::VectorXcd uu = as_vector(u), vv = as_vector(v);
    double best = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const UnitaryMap w = random_unitary(u.size(), mix64(seed + s));
        best = std::max(best, objective(w.matrix(), uu, vv));
    }
    return best;
}

}  // namespace infogeo

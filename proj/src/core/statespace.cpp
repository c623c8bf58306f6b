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

#include "infogeo/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "infogeo/error.hpp"

namespace infogeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double squared_norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

void require_size(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has size " +
                                                      std::to_string(got) + ", expected " +
                                                      std::to_string(want));
    }
}

}  // namespace

double wrap_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

EventDist::EventDist(std::vector<double> event_probs) : probs_(std::move(event_probs)) {
    if (probs_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "an event distribution needs at least two events");
    }
    double total = 0.0;
    for (double x : probs_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw Error(ErrorCode::InvalidArgument, "event probabilities must be non-negative");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::InvalidArgument, "event probabilities must sum to 1");
    }
}

RealState::RealState(std::vector<double> q) : q_(std::move(q)) {
    if (q_.empty() || q_.size() % 2 != 0) {
        throw Error(ErrorCode::OddDimension, "a real state needs an even, non-zero length");
    }
    for (double x : q_) {
        if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite component");
    }
    if (std::abs(std::sqrt(squared_norm(q_)) - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::InvalidArgument, "real state must have unit norm");
    }
}

RealState RealState::normalized(std::vector<double> q) {
    const double norm = std::sqrt(squared_norm(q));
    if (!(norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
    for (double &x : q) x /= norm;
    return RealState(std::move(q));
}

GaugeConvention::GaugeConvention(double a_, double b_) : a(a_), b(b_) {
    if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidArgument, "gauge slope a must be finite and non-zero");
    }
}

PolarState::PolarState(ProbDist p, std::vector<double> theta)
    : p_(std::move(p)), theta_(std::move(theta)) {
    require_size(theta_.size(), p_.size(), "theta");
    for (double &t : theta_) {
        if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "non-finite phase");
        t = wrap_angle(t);
    }
}

ComplexState::ComplexState(std::vector<Complex> v) : v_(std::move(v)) {
    if (v_.empty()) throw Error(ErrorCode::InvalidArgument, "empty complex state");
    double total = 0.0;
    for (const Complex &z : v_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
        }
        total += std::norm(z);
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::InvalidArgument, "complex state must have unit norm");
    }
}

ComplexState ComplexState::normalized(std::vector<Complex> v) {
    double total = 0.0;
    for (const Complex &z : v) total += std::norm(z);
    if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
    const double inv = 1.0 / std::sqrt(total);
    for (Complex &z : v) z *= inv;
    return ComplexState(std::move(v));
}

ComplexState ComplexState::basis(std::size_t n, std::size_t k) {
    if (k >= n) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    std::vector<Complex> v(n);
    v[k] = 1.0;
    return ComplexState(std::move(v));
}

ComplexState ComplexState::with_global_phase(double alpha) const {
    const Complex w = std::polar(1.0, alpha);
    std::vector<Complex> out = v_;
    for (Complex &z : out) z *= w;
    return ComplexState(std::move(out));
}

std::vector<double> outcome_probs(std::span<const double> q) {
    if (q.size() % 2 != 0) throw Error(ErrorCode::OddDimension, "odd number of components");
    std::vector<double> p(q.size() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = q[2 * i] * q[2 * i] + q[2 * i + 1] * q[2 * i + 1];
    return p;
}

ProbDist coarse_grain(const EventDist &events) {
    if (events.size() % 2 != 0) {
        throw Error(ErrorCode::OddDimension, "events must come in pairs");
    }
    std::vector<double> p(events.size() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = events[2 * i] + events[2 * i + 1];
    return ProbDist(std::move(p));
}

EventDist state_event_probs(const RealState &q) {
    std::vector<double> P(q.size());
    for (std::size_t i = 0; i < P.size(); ++i) P[i] = q[i] * q[i];
    return EventDist(std::move(P));
}

RealState from_polar(const PolarState &ps) {
    const std::size_t n = ps.size();
    std::vector<double> q(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::sqrt(ps.probs()[i]);
        q[2 * i] = r * std::cos(ps.theta()[i]);
        q[2 * i + 1] = r * std::sin(ps.theta()[i]);
    }
    return RealState::normalized(std::move(q));
}

PolarState to_polar(const RealState &q) {
    const std::size_t n = q.outcomes();
    std::vector<double> p(n), theta(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = q[2 * i], y = q[2 * i + 1];
        p[i] = x * x + y * y;
        if (p[i] > 0.0) theta[i] = std::atan2(y, x);
    }
    return PolarState(ProbDist::renormalized(std::move(p)), std::move(theta));
}

ComplexState to_complex(const RealState &q) {
    std::vector<Complex> v(q.outcomes());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(q[2 * i], q[2 * i + 1]);
    return ComplexState(std::move(v));
}

RealState from_complex(const ComplexState &v) {
    std::vector<double> q(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        q[2 * i] = v[i].real();
        q[2 * i + 1] = v[i].imag();
    }
    return RealState(std::move(q));
}

ProbDist born_probs(const ComplexState &v) {
    std::vector<double> p(v.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(v[i]);
    return ProbDist(std::move(p));
}

PolarState gauge_shift(const PolarState &ps, double chi0, const GaugeConvention &g) {
    std::vector<double> theta = ps.theta();
    const double shift = g.a * chi0;
    for (double &t : theta) t = wrap_angle(t + shift);
    return PolarState(ps.probs(), std::move(theta));
}

double polar_metric_quadratic(const PolarState &ps, const TangentVec &dp,
                              std::span<const double> dtheta, const GaugeConvention &g,
                              std::span<const double> dchi) {
    const std::size_t n = ps.size();
    require_size(dp.size(), n, "dp");
    require_size(dtheta.size(), n, "dtheta");
    require_size(dchi.size(), n, "dchi");
    const double fisher = fisher_quadratic(ps.probs(), dp);
    double phase = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = dtheta[i] + g.a * dchi[i];
        phase += ps.probs()[i] * dt * dt;
    }
    return fisher + phase;
}

std::vector<double> polar_pushforward(const PolarState &ps, const TangentVec &dp,
                                      std::span<const double> dtheta) {
    const std::size_t n = ps.size();
    require_size(dp.size(), n, "dp");
    require_size(dtheta.size(), n, "dtheta");
    std::vector<double> dq(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = ps.probs()[i];
        const double c = std::cos(ps.theta()[i]), s = std::sin(ps.theta()[i]);
        if (p == 0.0) {
            if (dp[i] != 0.0) {
                throw Error(ErrorCode::SingularMetric, "radial perturbation at p = 0");
            }
            continue;
        }
        const double r = std::sqrt(p);
        const double dr = dp[i] / (2.0 * r);
        dq[2 * i] = dr * c - r * s * dtheta[i];
        dq[2 * i + 1] = dr * s + r * c * dtheta[i];
    }
    return dq;
}

std::vector<double> event_tangent_to_state(const RealState &q, std::span<const double> dP) {
    require_size(dP.size(), q.size(), "dP");
    std::vector<double> dq(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (dP[i] == 0.0) continue;
        if (q[i] == 0.0) throw Error(ErrorCode::SingularMetric, "event perturbation at P = 0");
        dq[i] = dP[i] / (2.0 * q[i]);
    }
    return dq;
}

MeasureCheck measure_invariance_check(std::span<const double> theta_prime_samples,
                                      double tolerance) {
    if (theta_prime_samples.size() < 2) {
        throw Error(ErrorCode::EmptyGrid, "need at least two grid points");
    }
    double lo = std::abs(theta_prime_samples[0]), hi = lo, sum = 0.0;
    for (double x : theta_prime_samples) {
        const double a = std::abs(x);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
        sum += a;
    }
    MeasureCheck r;
    r.mean = sum / static_cast<double>(theta_prime_samples.size());
    r.deviation = hi - lo;
    r.passed = r.deviation <= tolerance * r.mean;
    return r;
}

std::vector<double> sample_theta_prime(const std::function<double(double)> &theta, double lo,
                                       double hi, std::size_t points) {
    if (points < 2) throw Error(ErrorCode::EmptyGrid, "need at least two grid points");
    const double h = 1e-3 * std::max(1.0, std::abs(hi - lo));
    std::vector<double> out(points);
    for (std::size_t k = 0; k < points; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
        const double d = (-theta(x + 2 * h) + 8 * theta(x + h) - 8 * theta(x - h) + theta(x - 2 * h)) /
                         (12 * h);
        out[k] = std::abs(d);
    }
    return out;
}

double affine_measure_density(const GaugeConvention &g, double /*chi*/) {
    const double c = 1.0 / (kTwoPi * std::abs(g.a));
    return c * std::abs(g.a);
}

}  // namespace infogeo

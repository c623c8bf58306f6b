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

#include "infogeo/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "infogeo/error.hpp"
#include "infogeo/rng.hpp"
#include "infogeo/statespace.hpp"

namespace infogeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Collects checks and resolves tolerance overrides by check name.
class Checks {
  public:
    explicit Checks(const std::map<std::string, double> &overrides) : overrides_(overrides) {}

    void add(const std::string &name, double measured, double target, double tol, Comparison cmp,
             std::string detail = {}) {
        if (auto it = overrides_.find(name); it != overrides_.end()) {
            tol = it->second;
            used_.insert(name);
        }
        results_.push_back(make_check(name, measured, target, tol, cmp, std::move(detail)));
    }

    [[nodiscard]] double tolerance(const std::string &name, double fallback) {
        if (auto it = overrides_.find(name); it != overrides_.end()) {
            used_.insert(name);
            return it->second;
        }
        return fallback;
    }

    std::vector<CheckResult> take() { return std::move(results_); }
    [[nodiscard]] const std::set<std::string> &used() const { return used_; }

  private:
    const std::map<std::string, double> &overrides_;
    std::vector<CheckResult> results_;
    std::set<std::string> used_;
};

std::uint64_t require_seed(const RunConfig &cfg) {
    if (!cfg.seed) throw ConfigError(cfg.command + ": --seed is required for stochastic runs");
    return *cfg.seed;
}

std::size_t resolve_outcomes(const RunConfig &cfg, std::size_t minimum = 2) {
    const std::size_t n = cfg.n.value_or(2);
    if (n < minimum) {
        throw ConfigError(cfg.command + ": --n must be at least " + std::to_string(minimum));
    }
    if (n > 16) throw ConfigError(cfg.command + ": --n above 16 is outside the supported range");
    return n;
}

std::string short_num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Json base_config(const RunConfig &cfg) {
    Json j = cfg.to_json();
    return j;
}

// Dirichlet(1) draw mixed half-and-half with the uniform distribution, so
// every entry is at least 1/(2N).
ProbDist interior_dist(std::size_t n, Rng &rng) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double &x : w) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (double &x : w) x = 0.5 / static_cast<double>(n) + 0.5 * x / total;
    return ProbDist::renormalized(std::move(w));
}

ProbDist dirichlet_dist(std::size_t n, Rng &rng) {
    std::vector<double> w(n);
    for (double &x : w) x = -std::log(1.0 - rng.uniform());
    return ProbDist::renormalized(std::move(w));
}

// Zero-sum direction with max |entry| = 1.
std::vector<double> tangent_direction(std::size_t n, Rng &rng) {
    std::vector<double> d(n);
    double mean = 0.0;
    for (double &x : d) {
        x = rng.normal();
        mean += x;
    }
    mean /= static_cast<double>(n);
    double peak = 0.0;
    for (double &x : d) {
        x -= mean;
        peak = std::max(peak, std::abs(x));
    }
    for (double &x : d) x /= peak;
    // Fold the residual into the last entry so the sum is zero to rounding.
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += d[i];
    d[n - 1] = -s;
    return d;
}

ProbDist shifted(const ProbDist &p, const std::vector<double> &d, double eps) {
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + eps * d[i];
    return ProbDist::renormalized(std::move(out));
}

ComplexState random_complex_state(std::size_t n, std::uint64_t seed) {
    return to_complex(random_real_state(2 * n, seed));
}

double angle_gap(double a, double b) {
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

UnitaryMap dft_unitary(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    ComplexMatrix f(k, k);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
            f(r, c) = std::polar(norm, kTwoPi * static_cast<double>(r * c) / static_cast<double>(n));
        }
    }
    return UnitaryMap(f);
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs_diff(const ComplexState &a, const ComplexState &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double sq_norm(const std::vector<double> &x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rel_dev(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::vector<double> parse_list(const std::string &value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw ConfigError("cannot parse number '" + item + "'");
        }
    }
    return out;
}

std::uint64_t parse_u64(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
        const unsigned long long v = std::stoull(value, &used, 0);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception &) {
        throw ConfigError("invalid value for " + key + ": '" + value + "'");
    }
}

double parse_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception &) {
        throw ConfigError("invalid value for " + key + ": '" + value + "'");
    }
}

Report finish(const RunConfig &cfg, Json config, Checks &checks, Json metrics) {
    Report r;
    r.command = cfg.command;
    r.config = std::move(config);
    r.checks = checks.take();
    r.metrics = std::move(metrics);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

void RunConfig::set(const std::string &key, const std::string &value) {
    if (key == "command") {
        command = value;
    } else if (key == "n") {
        n = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "seed") {
        seed = parse_u64(key, value);
    } else if (key == "trials") {
        trials = parse_u64(key, value);
    } else if (key == "shots") {
        shots = parse_u64(key, value);
    } else if (key == "budget") {
        budget = parse_u64(key, value);
    } else if (key == "delta") {
        delta = parse_double(key, value);
    } else if (key == "p") {
        p = parse_list(value);
    } else if (key == "p2") {
        p2 = parse_list(value);
    } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
        tol_overrides[key.substr(4)] = parse_double(key, value);
    } else if (key == "tol-override") {
        const auto eq = value.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("tolerance override must look like name=value");
        }
        tol_overrides[value.substr(0, eq)] = parse_double(key, value.substr(eq + 1));
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

Json RunConfig::to_json() const {
    Json j;
    j["command"] = command;
    j["n"] = n ? Json(*n) : Json(nullptr);
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["trials"] = trials ? Json(*trials) : Json(nullptr);
    j["shots"] = shots ? Json(*shots) : Json(nullptr);
    j["budget"] = budget ? Json(*budget) : Json(nullptr);
    j["delta"] = delta ? Json(*delta) : Json(nullptr);
    j["p"] = p ? Json(*p) : Json(nullptr);
    j["p2"] = p2 ? Json(*p2) : Json(nullptr);
    Json tol = Json::object();
    for (const auto &[k, v] : tol_overrides) tol[k] = v;
    j["tol_overrides"] = std::move(tol);
    return j;
}

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names{"coin-distinguish", "metric-check", "correspondence",
                                                "born-check", "wootters", "all"};
    return names;
}

// ---------------------------------------------------------------------------
// Exact expected gain by enumeration

std::optional<double> expected_gain_by_enumeration(const CoinExperiment &exp, std::uint64_t max_terms,
                                                   const EntropyFn &u) {
    struct Group {
        double prob_a = 0.0;
        double log_ratio = 0.0;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < exp.p.size(); ++i) {
        if (exp.p[i] == 0.0) continue;  // never observed under coin A
        const double lr = exp.p2[i] == 0.0 ? std::numeric_limits<double>::infinity()
                                           : std::log(exp.p[i]) - std::log(exp.p2[i]);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group &g) { return g.log_ratio == lr; });
        if (it == groups.end()) {
            groups.push_back({exp.p[i], lr});
        } else {
            it->prob_a += exp.p[i];
        }
    }
    const std::uint64_t n = exp.tosses;
    // Number of compositions C(n + g - 1, g - 1), capped.
    double terms = 1.0;
    for (std::size_t k = 1; k < groups.size(); ++k) {
        terms *= static_cast<double>(n + k) / static_cast<double>(k);
        if (terms > static_cast<double>(max_terms)) return std::nullopt;
    }

    const double prior_log = std::log(exp.prior_a) - std::log1p(-exp.prior_a);
    const double u0 = u(0.5, 0.5);
    const double log_nfact = std::lgamma(static_cast<double>(n) + 1.0);
    std::vector<double> log_q(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) log_q[g] = std::log(groups[g].prob_a);

    double expectation = 0.0;
    std::function<void(std::size_t, std::uint64_t, double, double)> recurse =
        [&](std::size_t g, std::uint64_t remaining, double log_pmf, double log_ratio) {
            if (g + 1 == groups.size()) {
                const auto c = static_cast<double>(remaining);
                const double lp = log_pmf + c * log_q[g] - std::lgamma(c + 1.0);
                const double lr = remaining > 0 ? log_ratio + c * groups[g].log_ratio : log_ratio;
                const PosteriorReport post = posterior_from_log_ratio(prior_log + lr);
                expectation += std::exp(log_nfact + lp) * (u0 - u(post.post_a, post.post_b));
                return;
            }
            for (std::uint64_t c = 0; c <= remaining; ++c) {
                const auto cd = static_cast<double>(c);
                const double lr = c > 0 ? log_ratio + cd * groups[g].log_ratio : log_ratio;
                recurse(g + 1, remaining - c, log_pmf + cd * log_q[g] - std::lgamma(cd + 1.0), lr);
            }
        };
    recurse(0, n, 0.0, 0.0);
    return expectation;
}

// ---------------------------------------------------------------------------
// coin-distinguish

Report cmd_coin_distinguish(const RunConfig &cfg) {
    const std::uint64_t trials = cfg.trials.value_or(10'000);
    const std::uint64_t seed = trials > 0 ? require_seed(cfg) : cfg.seed.value_or(0);

    std::optional<ProbDist> p, p2;
    double delta = 0.0;
    try {
        if (cfg.p) {
            p = ProbDist(*cfg.p);
            if (cfg.n && *cfg.n != p->size()) throw ConfigError("--p length differs from --n");
        } else {
            p = ProbDist::uniform(resolve_outcomes(cfg));
        }
        if (cfg.p2) {
            p2 = ProbDist(*cfg.p2);
        } else {
            delta = cfg.delta.value_or(0.005);
            std::vector<double> v = p->vec();
            v[0] += delta;
            v[1] -= delta;
            p2 = ProbDist(v);
        }
    } catch (const Error &e) {
        throw ConfigError(std::string("coin-distinguish: ") + e.what());
    }
    if (p->size() != p2->size()) throw ConfigError("coin-distinguish: coins differ in size");

    double ds2 = 0.0;
    try {
        ds2 = fisher_quadratic(*p, TangentVec::between(*p, *p2));
    } catch (const Error &e) {
        throw ConfigError(std::string("coin-distinguish: ") + e.what());
    }

    Json config = base_config(cfg);
    config["resolved"] = Json{{"p", p->vec()}, {"p2", p2->vec()}, {"trials", trials}, {"seed", seed}};

    Checks checks(cfg.tol_overrides);
    Json sweep = Json::array();
    const std::vector<double> targets{0.1, 0.05, 0.02, 0.01};
    std::vector<std::uint64_t> tosses;
    if (ds2 > 0.0) {
        for (double x : targets) tosses.push_back(std::max<std::uint64_t>(1, std::llround(x / ds2)));
    } else {
        tosses.push_back(100);
    }

    const double sigma = checks.tolerance("mc_sigma", 3.0);
    for (std::size_t k = 0; k < tosses.size(); ++k) {
        const CoinExperiment exp(*p, *p2, tosses[k]);
        const double nds2 = static_cast<double>(tosses[k]) * ds2;
        const double exact = info_gain_exact(exp);
        const double approx = info_gain_approx(exp);
        Json row{{"tosses", tosses[k]},
                 {"n_ds2", nds2},
                 {"expected_log_ratio", expected_log_ratio(exp)},
                 {"expansion_log_ratio", expansion_log_ratio(exp)},
                 {"info_gain_exact", exact},
                 {"info_gain_approx", approx},
                 {"ratio", approx > 0.0 ? Json(exact / approx) : Json(nullptr)}};
        std::optional<MonteCarloSummary> mc;
        if (trials > 0) {
            mc = monte_carlo_gain(exp, trials, mix64(seed + k));
            row["monte_carlo"] = monte_carlo_to_json(*mc);
            const PosteriorReport mean_post{mc->mean_post_a, 1.0 - mc->mean_post_a, 0.0};
            const EntropyFn h = EntropyFn::shannon();
            row["gain_of_mean_posterior"] = h(0.5, 0.5) - h(mean_post.post_a, mean_post.post_b);
            row["mc_minus_exact_in_se"] =
                mc->std_error > 0.0 ? Json((mc->mean_gain - exact) / mc->std_error) : Json(nullptr);
        }
        const std::optional<double> expected = expected_gain_by_enumeration(exp);
        row["enumerated_expected_gain"] = expected ? Json(*expected) : Json(nullptr);
        sweep.push_back(std::move(row));

        const std::string at = "@" + short_num(ds2 > 0.0 ? targets[k] : 0.0);
        if (ds2 > 0.0 && k > 0) {
            checks.add("gain_ratio" + at, std::abs(exact / approx - 1.0), 0.0, targets[k], Comparison::AtMost,
                       "exact/approx information gain at n*ds^2=" + short_num(nds2));
        }
        if (ds2 == 0.0) {
            double worst = std::max(exact, approx);
            if (mc) worst = std::max(worst, std::abs(mc->mean_gain));
            checks.add("zero_gain", worst, 0.0, 1e-15, Comparison::AtMost, "identical coins");
        }
        if (mc && expected) {
            const double diff = std::abs(mc->mean_gain - *expected);
            const double z = mc->std_error > 0.0 ? diff / mc->std_error : (diff == 0.0 ? 0.0 : INFINITY);
            checks.add("mc_vs_enumeration" + at, z, 0.0, sigma, Comparison::AtMost,
                       "Monte Carlo mean gain vs exact expectation, in standard errors");
        }
    }
    Json metrics{{"ds2", ds2}, {"delta", delta}, {"sweep", std::move(sweep)}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

// ---------------------------------------------------------------------------
// metric-check

Report cmd_metric_check(const RunConfig &cfg) {
    const std::size_t n = resolve_outcomes(cfg);
    const std::uint64_t seed = require_seed(cfg);
    const std::uint64_t samples = cfg.trials.value_or(1000);
    if (samples == 0) throw ConfigError("metric-check: --trials must be positive");
    const Rng root(seed);
    Checks checks(cfg.tol_overrides);
    Json metrics;

    // KL vs twice the Fisher form under epsilon halving.
    {
        const std::vector<double> eps{1e-2, 5e-3, 2.5e-3};
        std::vector<double> total(eps.size(), 0.0);
        std::vector<double> pair_orders;
        Rng rng = root.split(1);
        for (std::uint64_t s = 0; s < samples; ++s) {
            const ProbDist p = interior_dist(n, rng);
            const std::vector<double> d = tangent_direction(n, rng);
            std::vector<double> err(eps.size());
            for (std::size_t k = 0; k < eps.size(); ++k) {
                const ProbDist q = shifted(p, d, eps[k]);
                err[k] = std::abs(kl_divergence(p, q) - 2.0 * fisher_quadratic(p, TangentVec::between(p, q)));
                total[k] += err[k];
            }
            if (err[2] > 0.0) pair_orders.push_back(std::log2(err[1] / err[2]));
        }
        const double order1 = std::log2(total[0] / total[1]);
        const double order2 = std::log2(total[1] / total[2]);
        std::sort(pair_orders.begin(), pair_orders.end());
        metrics["kl_fisher"] = Json{{"aggregate_error", total},
                                    {"orders", {order1, order2}},
                                    {"median_pair_order", pair_orders.empty() ? 0.0 : pair_orders[pair_orders.size() / 2]}};
        checks.add("kl_fisher_order", std::min(order1, order2), 2.7, 0.0, Comparison::AtLeast,
                   "observed convergence order of |KL - 2 ds^2| under epsilon halving");
    }

    // Statistical distance identities.
    {
        Rng rng = root.split(2);
        double embed = 0.0, triangle = -INFINITY, scaling = 0.0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const ProbDist a = dirichlet_dist(n, rng), b = dirichlet_dist(n, rng), c = dirichlet_dist(n, rng);
            const std::vector<double> qa = sqrt_embed(a), qb = sqrt_embed(b);
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += qa[i] * qb[i];
            embed = std::max(embed, std::abs(std::cos(statistical_distance(a, b)) - dot));
            triangle = std::max(triangle, statistical_distance(a, c) - statistical_distance(a, b) -
                                              statistical_distance(b, c));
            const TangentVec dp(tangent_direction(n, rng));
            const double lambda = rng.uniform(-3.0, 3.0);
            scaling = std::max(scaling, rel_dev(fisher_quadratic(a, dp.scaled(lambda)),
                                                lambda * lambda * fisher_quadratic(a, dp)));
        }
        checks.add("sqrt_embed_distance", embed, 0.0, 1e-12, Comparison::AtMost,
                   "|cos d_S - <sqrt p, sqrt p2>|");
        checks.add("triangle_inequality", std::max(triangle, 0.0), 0.0, 1e-12, Comparison::AtMost);
        checks.add("fisher_scaling", scaling, 0.0, 1e-12, Comparison::AtMost, "relative deviation");
    }

    // Pullback of the Euclidean metric on Q to the Fisher metric on P.
    {
        Rng rng = root.split(3);
        double worst = 0.0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const ProbDist P = interior_dist(2 * n, rng);
            std::vector<double> q(2 * n);
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::sqrt(P[i]);
            const RealState Q = RealState::normalized(q);
            std::vector<double> dP = tangent_direction(2 * n, rng);
            for (double &x : dP) x *= 1e-3;
            const double fisher = fisher_quadratic(P, TangentVec(dP));
            const double euclid = sq_norm(event_tangent_to_state(Q, dP));
            worst = std::max(worst, rel_dev(fisher, euclid));
        }
        checks.add("pullback", worst, 0.0, 1e-10, Comparison::AtMost,
                   "relative gap between 1/4 sum dP^2/P and |dQ|^2");
    }

    // Polar coordinates: metric form, pushforward, finite differences.
    {
        Rng rng = root.split(4);
        double vs_push = 0.0, vs_fd = 0.0, coarse = 0.0, additivity = 0.0, born = 0.0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const ProbDist p = interior_dist(n, rng);
            std::vector<double> theta(n);
            for (double &t : theta) t = rng.uniform(0.0, kTwoPi);
            const PolarState ps(p, theta);
            const double a = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
            const GaugeConvention g(a, rng.uniform(-3.0, 3.0));
            std::vector<double> dpv = tangent_direction(n, rng);
            for (double &x : dpv) x *= 1e-2 * p.vec()[0];
            const TangentVec dp(dpv);
            std::vector<double> dtheta(n), dchi(n), total(n);
            for (std::size_t i = 0; i < n; ++i) {
                dtheta[i] = 1e-2 * rng.normal();
                dchi[i] = 1e-2 * rng.normal();
                total[i] = dtheta[i] + a * dchi[i];
            }
            const double quad = polar_metric_quadratic(ps, dp, dtheta, g, dchi);
            vs_push = std::max(vs_push, rel_dev(quad, sq_norm(polar_pushforward(ps, dp, total))));

            const double t = 1e-5;
            auto moved = [&](double sign) {
                std::vector<double> pp(n), tt(n);
                for (std::size_t i = 0; i < n; ++i) {
                    pp[i] = p[i] + sign * t * dp[i];
                    tt[i] = theta[i] + sign * t * total[i];
                }
                return from_polar(PolarState(ProbDist::renormalized(pp), tt)).vec();
            };
            const std::vector<double> plus = moved(1.0), minus = moved(-1.0);
            std::vector<double> fd(2 * n);
            for (std::size_t i = 0; i < fd.size(); ++i) fd[i] = (plus[i] - minus[i]) / (2.0 * t);
            vs_fd = std::max(vs_fd, rel_dev(quad, sq_norm(fd)));

            const RealState Q = from_polar(ps);
            coarse = std::max(coarse, max_abs_diff(coarse_grain(state_event_probs(Q)).vec(), p.vec()));

            const double chi0 = rng.uniform(-5.0, 5.0), chi1 = rng.uniform(-5.0, 5.0);
            const PolarState twice = gauge_shift(gauge_shift(ps, chi0, g), chi1, g);
            const PolarState once = gauge_shift(ps, chi0 + chi1, g);
            for (std::size_t i = 0; i < n; ++i) {
                additivity = std::max(additivity, angle_gap(twice.theta()[i], once.theta()[i]));
            }
            const ProbDist base = born_probs(to_complex(Q));
            for (int k = 0; k < 32; ++k) {
                const double shift = kTwoPi * k / 32.0;
                const ProbDist moved_p = born_probs(to_complex(from_polar(gauge_shift(ps, shift, g))));
                born = std::max(born, max_abs_diff(moved_p.vec(), base.vec()));
            }
        }
        checks.add("polar_metric", vs_push, 0.0, 1e-10, Comparison::AtMost,
                   "polar quadratic form vs Euclidean length of the pushed-forward tangent");
        checks.add("polar_metric_fd", vs_fd, 0.0, 1e-6, Comparison::AtMost,
                   "polar quadratic form vs central finite difference of the embedding");
        checks.add("coarse_grain_consistency", coarse, 0.0, 1e-12, Comparison::AtMost);
        checks.add("gauge_additivity", additivity, 0.0, 1e-12, Comparison::AtMost);
        checks.add("born_gauge_invariance", born, 0.0, 1e-12, Comparison::AtMost);
    }

    // Measure invariance: affine laws are flat, a quadratic law is not.
    {
        const double tol = checks.tolerance("measure_flatness", 1e-9);
        const std::vector<std::pair<double, double>> affine{{1.0, 0.0}, {3.0, 2.0}, {-0.5, 1.0}};
        double worst = 0.0;
        for (auto [a, b] : affine) {
            const auto samples_tp =
                sample_theta_prime([a, b](double x) { return a * x + b; }, 0.0, kTwoPi, 101);
            const MeasureCheck mc = measure_invariance_check(samples_tp, tol);
            worst = std::max(worst, mc.deviation / mc.mean);
        }
        checks.add("measure_affine", worst, 0.0, tol, Comparison::AtMost,
                   "relative spread of |theta'| for affine theta");
        const auto quad = sample_theta_prime([](double x) { return x * x; }, 0.0, 1.0, 101);
        const MeasureCheck mq = measure_invariance_check(quad, tol);
        checks.add("measure_quadratic_deviation", mq.deviation, 2.0, 1e-9, Comparison::Near,
                   "theta = chi^2 on [0,1]");
        checks.add("measure_quadratic_rejected", mq.passed ? 1.0 : 0.0, 0.0, 0.0, Comparison::Near,
                   "quadratic theta must fail the invariance check");
        metrics["measure"] = Json{{"quadratic_deviation", mq.deviation}, {"quadratic_mean", mq.mean},
                                  {"affine_density", affine_measure_density(GaugeConvention{}, 0.0)}};
    }

    Json config = base_config(cfg);
    config["resolved"] = Json{{"n", n}, {"seed", seed}, {"trials", samples}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

// ---------------------------------------------------------------------------
// correspondence

namespace {

RealMatrix constructed_blocks(const UnitaryMap &u, int beta, RealMatrix *alpha_out = nullptr,
                              RealMatrix *phi_out = nullptr) {
    const Eigen::Index n = u.matrix().rows();
    RealMatrix alpha(n, n), phi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            alpha(i, j) = std::abs(u.matrix()(i, j));
            phi(i, j) = wrap_angle(std::arg(u.matrix()(i, j)));
        }
    }
    std::vector<int> betas(static_cast<std::size_t>(n * n), beta);
    if (alpha_out) *alpha_out = alpha;
    if (phi_out) *phi_out = phi;
    return assemble_blocks(alpha, phi, betas);
}

Report correspondence_degenerate(const RunConfig &cfg, std::uint64_t seed, std::uint64_t draws) {
    Checks checks(cfg.tol_overrides);
    std::size_t t1 = 0, t2 = 0, neither = 0, det_mismatch = 0;
    for (std::uint64_t k = 0; k < draws; ++k) {
        const OrthogonalMap m = random_orthogonal(2, mix64(seed + k));
        const TransformKind kind = classify(m).kind;
        const double det = m.matrix().determinant();
        if (kind == TransformKind::Type1) ++t1;
        if (kind == TransformKind::Type2) ++t2;
        if (kind == TransformKind::Neither) ++neither;
        if ((kind == TransformKind::Type1) != (det > 0.0)) ++det_mismatch;
    }
    checks.add("degenerate_exhaustive", static_cast<double>(neither), 0.0, 0.0, Comparison::AtMost,
               "every 2x2 orthogonal map is Type1 (rotation) or Type2 (reflection)");
    checks.add("degenerate_det_matches_type", static_cast<double>(det_mismatch), 0.0, 0.0, Comparison::AtMost);
    Json metrics{{"degenerate", true},
                 {"note", "N=1: the 2x2 orthogonal group is exhausted by rotations (unitary phases) and "
                          "reflections (antiunitary conjugations)"},
                 {"counts", {{"Type1", t1}, {"Type2", t2}, {"Neither", neither}}}};
    Json config = base_config(cfg);
    config["resolved"] = Json{{"n", 1}, {"seed", seed}, {"haar_draws", draws}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

}  // namespace

Report cmd_correspondence(const RunConfig &cfg) {
    const std::size_t n = resolve_outcomes(cfg, 1);
    const std::uint64_t seed = require_seed(cfg);
    const std::uint64_t trials = cfg.trials.value_or(100);
    if (trials == 0) throw ConfigError("correspondence: --trials must be positive");
    const std::uint64_t haar_draws = 10 * trials;
    if (n == 1) return correspondence_degenerate(cfg, seed, haar_draws);

    Checks checks(cfg.tol_overrides);
    const auto dim = 2 * n;
    std::size_t counts[3] = {0, 0, 0};
    auto tally = [&](TransformKind k) { ++counts[static_cast<int>(k)]; };

    std::size_t t1_wrong = 0, t2_wrong = 0, closure_wrong = 0;
    double unitary_defect = 0.0, anti_defect = 0.0, params = 0.0, roundtrip = 0.0, complex_rt = 0.0;
    double equiv = 0.0, probe_worst = 0.0, identity_gap = 0.0;
    std::vector<OrthogonalMap> type1, type2;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const UnitaryMap u = random_unitary(n, mix64(seed ^ (0x7100 + k)));
        RealMatrix alpha, phi;
        const OrthogonalMap m1(constructed_blocks(u, 0, &alpha, &phi));
        const TransformType c1 = classify(m1);
        tally(c1.kind);
        if (c1.kind != TransformKind::Type1) {
            ++t1_wrong;
        } else {
            const UnitaryMap back = to_unitary(m1);
            const auto &bm = back.matrix();
            unitary_defect = std::max(unitary_defect,
                                      (bm.adjoint() * bm - ComplexMatrix::Identity(n, n)).norm());
            for (Eigen::Index i = 0; i < alpha.rows(); ++i) {
                for (Eigen::Index j = 0; j < alpha.cols(); ++j) {
                    params = std::max(params, std::abs(c1.alpha(i, j) - alpha(i, j)));
                    if (alpha(i, j) > 1e-6) params = std::max(params, alpha(i, j) * angle_gap(c1.phi(i, j), phi(i, j)));
                }
            }
            roundtrip = std::max(roundtrip, (to_unitary(from_unitary(u)).matrix() - u.matrix()).cwiseAbs().maxCoeff());
            type1.push_back(m1);
        }

        const AntiunitaryMap au(u.matrix());
        const OrthogonalMap m2(constructed_blocks(u, 1));
        const TransformType c2 = classify(m2);
        tally(c2.kind);
        if (c2.kind != TransformKind::Type2) {
            ++t2_wrong;
        } else {
            const ComplexMatrix am = to_antiunitary(m2).matrix();
            anti_defect = std::max(anti_defect, (am.adjoint() * am - ComplexMatrix::Identity(n, n)).norm());
            identity_gap = std::max(identity_gap, std::abs((m2.matrix() - RealMatrix::Identity(dim, dim)).norm() -
                                                           2.0 * std::sqrt(static_cast<double>(n))));
            type2.push_back(m2);
        }

        const RealState q = random_real_state(dim, mix64(seed ^ (0x7200 + k)));
        complex_rt = std::max(complex_rt, max_abs_diff(from_complex(to_complex(q)).vec(), q.vec()));
        if (c1.kind == TransformKind::Type1) {
            equiv = std::max(equiv, max_abs_diff(to_complex(m1.apply(q)), to_unitary(m1).apply(to_complex(q))));
            probe_worst = std::max(probe_worst, gauge_invariance_probe(m1, mix64(seed ^ (0x7300 + k))).max_deviation);
        }
        if (c2.kind == TransformKind::Type2) {
            equiv = std::max(equiv, max_abs_diff(to_complex(m2.apply(q)), to_antiunitary(m2).apply(to_complex(q))));
            probe_worst = std::max(probe_worst, gauge_invariance_probe(m2, mix64(seed ^ (0x7400 + k))).max_deviation);
        }
    }
    // Group closure under composition.
    for (std::size_t k = 0; k + 1 < type1.size() && k + 1 < type2.size(); ++k) {
        const auto kind = [](const OrthogonalMap &m) { return classify(m).kind; };
        if (kind(type1[k].compose(type1[k + 1])) != TransformKind::Type1) ++closure_wrong;
        if (kind(type1[k].compose(type2[k])) != TransformKind::Type2) ++closure_wrong;
        if (kind(type2[k].compose(type1[k])) != TransformKind::Type2) ++closure_wrong;
        if (kind(type2[k].compose(type2[k + 1])) != TransformKind::Type1) ++closure_wrong;
    }

    checks.add("type1_classified", static_cast<double>(t1_wrong), 0.0, 0.0, Comparison::AtMost,
               "constructed scale-rotation block matrices not classified Type1");
    checks.add("type2_classified", static_cast<double>(t2_wrong), 0.0, 0.0, Comparison::AtMost,
               "constructed scale-rotation-reflection block matrices not classified Type2");
    checks.add("unitary_defect", unitary_defect, 0.0, 1e-10, Comparison::AtMost, "max ||U^H U - I||_F");
    checks.add("antiunitary_defect", anti_defect, 0.0, 1e-10, Comparison::AtMost);
    checks.add("block_parameters", params, 0.0, 1e-10, Comparison::AtMost,
               "recovered alpha, phi vs constructed");
    checks.add("unitary_roundtrip", roundtrip, 0.0, 1e-12, Comparison::AtMost);
    checks.add("complex_roundtrip", complex_rt, 0.0, 1e-12, Comparison::AtMost);
    checks.add("equivariance", equiv, 0.0, 1e-10, Comparison::AtMost);
    checks.add("type_probe_pass", probe_worst, 0.0, 1e-10, Comparison::AtMost,
               "worst gauge-probe deviation over Type1/Type2 maps");
    checks.add("group_closure", static_cast<double>(closure_wrong), 0.0, 0.0, Comparison::AtMost);
    checks.add("type2_identity_distance", identity_gap, 0.0, 1e-10, Comparison::AtMost,
               "Type2 maps sit at Frobenius distance 2 sqrt(N) from the identity");

    // Haar orthogonal maps are generically of neither type.
    std::size_t not_neither = 0, probe_passed = 0;
    double weakest = INFINITY;
    Json witnesses = Json::array();
    for (std::uint64_t k = 0; k < haar_draws; ++k) {
        const OrthogonalMap m = random_orthogonal(dim, mix64(seed ^ (0x8000 + k)));
        const TransformKind kind = classify(m).kind;
        tally(kind);
        if (kind != TransformKind::Neither) ++not_neither;
        const ProbeResult pr = gauge_invariance_probe(m, mix64(seed ^ (0x9000 + k)));
        if (pr.passed) ++probe_passed;
        weakest = std::min(weakest, pr.max_deviation);
        if (!pr.passed && witnesses.size() < 5) {
            witnesses.push_back(Json{{"draw", k}, {"state", *pr.witness_state},
                                     {"chi0", *pr.witness_chi0}, {"deviation", pr.max_deviation}});
        }
    }
    checks.add("haar_neither", static_cast<double>(not_neither), 0.0, 0.0, Comparison::AtMost,
               "Haar orthogonal maps classified Type1 or Type2");
    checks.add("haar_probe_fail", static_cast<double>(probe_passed), 0.0, 0.0, Comparison::AtMost,
               "Haar orthogonal maps that passed the gauge probe");

    // Mixed per-block reflections break orthogonality or the type.
    std::size_t mixed_typed = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const UnitaryMap u = random_unitary(n, mix64(seed ^ (0xA000 + k)));
        RealMatrix alpha, phi;
        constructed_blocks(u, 0, &alpha, &phi);
        std::vector<int> betas(n * n);
        for (std::size_t i = 0; i < betas.size(); ++i) betas[i] = static_cast<int>((i + k) % 2);
        const RealMatrix raw = assemble_blocks(alpha, phi, betas);
        try {
            if (classify(OrthogonalMap(raw)).kind != TransformKind::Neither) ++mixed_typed;
        } catch (const Error &) {
            // Not orthogonal.
        }
    }
    checks.add("mixed_beta", static_cast<double>(mixed_typed), 0.0, 0.0, Comparison::AtMost,
               "mixed-reflection block matrices that are orthogonal and typed");

    // Givens rotation by pi/4 in the (Q1, Q3) plane.
    RealMatrix givens = RealMatrix::Identity(dim, dim);
    const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
    givens(0, 0) = c;
    givens(0, 2) = -s;
    givens(2, 0) = s;
    givens(2, 2) = c;
    const OrthogonalMap gm(givens);
    const TransformType gt = classify(gm);
    const ProbeResult gp = gauge_invariance_probe(gm, mix64(seed ^ 0xB000));
    checks.add("givens_neither", gt.kind == TransformKind::Neither && !gp.passed ? 0.0 : 1.0, 0.0, 0.0,
               Comparison::Near, "Q1-Q3 plane rotation is of neither type and breaks gauge invariance");

    Json metrics;
    metrics["counts"] = Json{{"Type1", counts[0]}, {"Type2", counts[1]}, {"Neither", counts[2]}};
    metrics["haar_weakest_probe_deviation"] = weakest;
    metrics["haar_witnesses"] = std::move(witnesses);
    metrics["givens"] = Json{{"matrix", matrix_to_json(givens)},
                             {"commutator", gt.commutator},
                             {"anticommutator", gt.anticommutator},
                             {"probe_deviation", gp.max_deviation},
                             {"witness_state", gp.witness_state ? Json(*gp.witness_state) : Json(nullptr)},
                             {"witness_chi0", gp.witness_chi0 ? Json(*gp.witness_chi0) : Json(nullptr)}};
    Json config = base_config(cfg);
    config["resolved"] = Json{{"n", n}, {"seed", seed}, {"trials", trials}, {"haar_draws", haar_draws}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

// ---------------------------------------------------------------------------
// born-check

Report cmd_born_check(const RunConfig &cfg) {
    const std::size_t n = resolve_outcomes(cfg);
    const std::uint64_t seed = require_seed(cfg);
    const std::uint64_t trials = cfg.trials.value_or(100);
    const std::uint64_t shots = cfg.shots.value_or(100'000);
    if (trials == 0 || shots == 0) throw ConfigError("born-check: --trials and --shots must be positive");
    Checks checks(cfg.tol_overrides);
    Rng rng = Rng(seed).split(5);

    double consistency = 0.0, completeness = 0.0, phase = 0.0, repro = 0.0, repeat = 0.0;
    std::size_t simulability_failed = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const UnitaryMap u = random_unitary(n, mix64(seed ^ (0xC000 + k)));
        std::vector<double> phases(n);
        for (double &x : phases) x = rng.uniform(0.0, kTwoPi);
        const Measurement meas(u, phases);
        const ComplexState v = random_complex_state(n, mix64(seed ^ (0xC100 + k)));

        const ProbDist p = outcome_distribution(meas, v);
        consistency = std::max(consistency, max_abs_diff(p.vec(), born_probs(u.apply(v)).vec()));

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex overlap = 0.0;
            const ComplexState b = meas.basis_vector(i);
            for (std::size_t j = 0; j < n; ++j) overlap += std::conj(b[j]) * v[j];
            total += std::norm(overlap);
        }
        completeness = std::max(completeness, std::abs(total - 1.0));

        std::vector<double> other(n);
        for (double &x : other) x = rng.uniform(0.0, kTwoPi);
        const ProbDist p_alt = outcome_distribution(meas.with_phases(other), v.with_global_phase(rng.uniform(0.0, kTwoPi)));
        phase = std::max(phase, max_abs_diff(p.vec(), p_alt.vec()));

        for (std::size_t i = 0; i < n; ++i) {
            const ProbDist pi = outcome_distribution(meas, meas.basis_vector(i));
            for (std::size_t j = 0; j < n; ++j) repro = std::max(repro, std::abs(pi[j] - (i == j ? 1.0 : 0.0)));
        }

        const MeasurementRecord rec = apply_measurement(meas, v, rng);
        const ProbDist again = outcome_distribution(meas, rec.output_state);
        repeat = std::max(repeat, std::abs(1.0 - again[rec.outcome]));

        if (!simulability_roundtrip(meas, 4, mix64(seed ^ (0xC200 + k))).passed) ++simulability_failed;
    }
    checks.add("born_consistency", consistency, 0.0, 1e-12, Comparison::AtMost,
               "|v'_i^H v|^2 vs born_probs(U v)");
    checks.add("completeness", completeness, 0.0, 1e-12, Comparison::AtMost);
    checks.add("phase_irrelevance", phase, 0.0, 1e-14, Comparison::AtMost);
    checks.add("reproducibility", repro, 0.0, 1e-12, Comparison::AtMost);
    checks.add("repeat_measurement", repeat, 0.0, 1e-12, Comparison::AtMost);
    checks.add("simulability", static_cast<double>(simulability_failed), 0.0, 0.0, Comparison::AtMost,
               "random measurements whose U^{-1} arrangement failed the round trip");

    // Wrong post-interaction: V = I with a Fourier-type pre-interaction.
    const Measurement fourier(dft_unitary(n));
    const ReproducibilityResult wrong = arrangement_reproducibility(fourier, ComplexMatrix::Identity(n, n));
    checks.add("wrong_post_interaction", wrong.max_deviation, 1e-12, 0.0, Comparison::AtLeast,
               "V = I must break reproducibility");

    // Frequencies on the uniform superposition.
    const ComplexState e0 = ComplexState::basis(n, 0);
    const std::vector<std::uint64_t> counts = sample_outcomes(fourier, e0, shots, mix64(seed ^ 0xD000));
    const std::vector<std::uint64_t> counts2 = sample_outcomes(fourier, e0, shots, mix64(seed ^ 0xD000));
    const ProbDist expected = outcome_distribution(fourier, e0);
    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double mean = static_cast<double>(shots) * expected[i];
        const double sd = std::sqrt(static_cast<double>(shots) * expected[i] * (1.0 - expected[i]));
        worst_sigma = std::max(worst_sigma, sd > 0.0 ? std::abs(static_cast<double>(counts[i]) - mean) / sd : 0.0);
    }
    checks.add("shots_sigma", worst_sigma, 0.0, 3.0, Comparison::AtMost,
               "largest outcome-count deviation in binomial standard deviations");
    checks.add("sampling_determinism", counts == counts2 ? 0.0 : 1.0, 0.0, 0.0, Comparison::Near);

    Json metrics;
    metrics["counts"] = counts;
    metrics["expected"] = expected.vec();
    metrics["wrong_post_interaction_witness"] = wrong.witness ? Json(*wrong.witness) : Json(nullptr);
    metrics["example_record"] = record_to_json(apply_measurement(fourier, e0, std::size_t{0}));
    Json config = base_config(cfg);
    config["resolved"] = Json{{"n", n}, {"seed", seed}, {"trials", trials}, {"shots", shots}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

// ---------------------------------------------------------------------------
// wootters

Report cmd_wootters(const RunConfig &cfg) {
    const std::size_t n = resolve_outcomes(cfg);
    if (n > 8) throw ConfigError("wootters: --n above 8 is outside the optimizer's range");
    const std::uint64_t seed = require_seed(cfg);
    const std::uint64_t pairs = cfg.trials.value_or(20);
    const std::uint64_t budget = cfg.budget.value_or(8);
    if (pairs == 0 || budget == 0) throw ConfigError("wootters: --trials and --budget must be positive");
    Checks checks(cfg.tol_overrides);

    double max_gap = 0.0, cert_over_opt = -INFINITY, cert_over_h = -INFINITY;
    Json results = Json::array();
    std::optional<DistinguishabilityResult> first;
    std::optional<std::pair<ComplexState, ComplexState>> first_pair;
    for (std::uint64_t k = 0; k < pairs; ++k) {
        const ComplexState u = random_complex_state(n, mix64(seed ^ (0xE000 + k)));
        const ComplexState v = random_complex_state(n, mix64(seed ^ (0xE100 + k)));
        const DistinguishabilityResult r = maximize_statistical_distance(u, v, budget, mix64(seed ^ (0xE200 + k)));
        const double cert = certify_upper_bound(u, v, 200, mix64(seed ^ (0xE300 + k)));
        max_gap = std::max(max_gap, r.gap);
        cert_over_opt = std::max(cert_over_opt, cert - r.max_ds);
        cert_over_h = std::max(cert_over_h, cert - r.hilbert_distance);
        Json row = distinguishability_to_json(r);
        row["certified_lower_envelope"] = cert;
        results.push_back(std::move(row));
        if (!first) {
            first = r;
            first_pair.emplace(u, v);
        }
    }
    checks.add("max_gap", max_gap, 0.0, n == 2 ? 1e-3 : 5e-3, Comparison::AtMost,
               "|max d_S - arccos|u^H v||");
    checks.add("certify_below_optimum", std::max(cert_over_opt, 0.0), 0.0, 1e-9, Comparison::AtMost);
    checks.add("certify_below_hilbert", std::max(cert_over_h, 0.0), 0.0, 1e-9, Comparison::AtMost);

    // Joint rotation invariance on the first pair.
    {
        const UnitaryMap w = random_unitary(n, mix64(seed ^ 0xE400));
        const auto &[u, v] = *first_pair;
        const DistinguishabilityResult rotated =
            maximize_statistical_distance(w.apply(u), w.apply(v), budget, mix64(seed ^ 0xE200));
        checks.add("rotation_invariance", std::abs(rotated.max_ds - first->max_ds), 0.0, 1e-6, Comparison::AtMost);
    }

    // Degenerate pairs.
    {
        const ComplexState u = random_complex_state(n, mix64(seed ^ 0xE500));
        const DistinguishabilityResult same = maximize_statistical_distance(u, u, 1, mix64(seed ^ 0xE600));
        checks.add("identical_pair", same.max_ds, 0.0, 1e-12, Comparison::AtMost);
        const ComplexState e0 = ComplexState::basis(n, 0), e1 = ComplexState::basis(n, 1);
        const UnitaryMap w = random_unitary(n, mix64(seed ^ 0xE700));
        const DistinguishabilityResult orth =
            maximize_statistical_distance(w.apply(e0), w.apply(e1), budget, mix64(seed ^ 0xE800));
        checks.add("orthogonal_pair", orth.max_ds, std::numbers::pi / 2, 1e-6, Comparison::Near);
    }

    // Envelope: no measurement beats the Hilbert-space distance.
    double envelope = -INFINITY;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const ComplexState u = random_complex_state(n, mix64(seed ^ (0xF000 + k)));
        const ComplexState v = random_complex_state(n, mix64(seed ^ (0xF400 + k)));
        const Measurement meas(random_unitary(n, mix64(seed ^ (0xF800 + k))));
        envelope = std::max(envelope, measured_distance(meas, u, v) - hilbert_distance(u, v));
    }
    checks.add("envelope", std::max(envelope, 0.0), 0.0, 1e-9, Comparison::AtMost,
               "max over random triples of d_S - d_H");

    Json metrics;
    metrics["pairs"] = std::move(results);
    metrics["envelope_max_excess"] = envelope;
    Json config = base_config(cfg);
    config["resolved"] = Json{{"n", n}, {"seed", seed}, {"trials", pairs}, {"budget", budget}};
    return finish(cfg, std::move(config), checks, std::move(metrics));
}

// ---------------------------------------------------------------------------

namespace {

// Tolerance knobs that are not check names.
const std::set<std::string> kExtraKnobs{"mc_sigma", "measure_flatness"};

Report dispatch(const RunConfig &cfg) {
    if (cfg.command == "coin-distinguish") return cmd_coin_distinguish(cfg);
    if (cfg.command == "metric-check") return cmd_metric_check(cfg);
    if (cfg.command == "correspondence") return cmd_correspondence(cfg);
    if (cfg.command == "born-check") return cmd_born_check(cfg);
    if (cfg.command == "wootters") return cmd_wootters(cfg);
    if (cfg.command == "all") return cmd_all(cfg);
    throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace

Report cmd_all(const RunConfig &cfg) {
    Report all;
    all.command = "all";
    all.config = base_config(cfg);
    std::set<std::string> known = kExtraKnobs;
    for (const std::string &name : command_names()) {
        if (name == "all") continue;
        RunConfig sub = cfg;
        sub.command = name;
        // Unscoped overrides apply wherever the name occurs; "<command>/<check>" targets one command.
        sub.tol_overrides.clear();
        for (const auto &[k, v] : cfg.tol_overrides) {
            if (k.rfind(name + "/", 0) == 0) {
                sub.tol_overrides[k.substr(name.size() + 1)] = v;
            } else if (k.find('/') == std::string::npos) {
                sub.tol_overrides[k] = v;
            }
        }
        Report r = dispatch(sub);
        for (CheckResult &c : r.checks) {
            known.insert(c.name);
            c.name = name + "/" + c.name;
            known.insert(c.name);
            all.checks.push_back(std::move(c));
        }
        for (const std::string &knob : kExtraKnobs) known.insert(name + "/" + knob);
        all.metrics[name] = Json{{"config", r.config}, {"metrics", r.metrics}};
    }
    for (const auto &[k, v] : cfg.tol_overrides) {
        if (!known.count(k)) throw ConfigError("all: unknown tolerance override '" + k + "'");
    }
    return all;
}

Report run_command(const RunConfig &cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report r = dispatch(cfg);
    if (cfg.command != "all") {
        std::set<std::string> known = kExtraKnobs;
        for (const auto &c : r.checks) known.insert(c.name);
        for (const auto &[k, v] : cfg.tol_overrides) {
            if (!known.count(k)) throw ConfigError(cfg.command + ": unknown tolerance override '" + k + "'");
        }
    }
    r.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace infogeo

#ifndef RSUP_EXPERIMENTS_HPP
#define RSUP_EXPERIMENTS_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rsup/dist.hpp"
#include "rsup/interval.hpp"
#include "rsup/markov.hpp"
#include "rsup/range.hpp"
#include "rsup/sas.hpp"
#include "rsup/supmeasure.hpp"
#include "rsup/verify.hpp"

namespace rsup::experiments {

using json = nlohmann::json;

inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Check {
    std::string name;
    double value;
    double threshold;
    bool pass;
};

struct Result {
    std::string experiment;
    json params;
    std::vector<std::string> csv; // header + rows
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check_lt(const std::string& name, double value, double threshold) {
        checks.push_back({name, value, threshold, value < threshold});
    }
    void check_true(const std::string& name, bool ok) {
        checks.push_back({name, ok ? 1.0 : 0.0, 0.5, ok});
    }
    void row(std::initializer_list<std::string> cells) {
        std::string line;
        for (const auto& c : cells) {
            if (!line.empty()) line += ',';
            line += c;
        }
        csv.push_back(line);
    }

    json summary() const {
        json checks_j = json::array();
        for (const auto& c : checks)
            checks_j.push_back({{"statistic", c.name},
                               {"value", c.value},
                               {"threshold", c.threshold},
                               {"pass", c.pass}});
        return {{"experiment", experiment},
                {"parameters", params},
                {"checks", checks_j},
                {"pass", pass()}};
    }
};

inline std::string csv_text(const Result& r) {
    std::string out;
    for (const auto& line : r.csv) {
        out += line;
        out += '\n';
    }
    return out;
}

// results.csv and summary.json under dir (created if needed)
inline void write_artifacts(const Result& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir + "/results.csv", std::ios::binary);
    csv << csv_text(r);
    std::ofstream js(dir + "/summary.json", std::ios::binary);
    js << r.summary().dump(2) << '\n';
}

// Deterministic replicate parallelism: slot i is always produced by the
// stream (seed, phase, i), so output does not depend on the thread count.
inline std::uint64_t phase_seed(std::uint64_t seed, std::uint64_t phase) {
    return mix64(seed ^ mix64(phase + 0x243f6a8885a308d3ULL));
}

template <typename Fn>
void parallel_for(std::size_t total, unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// maximum-likelihood Frechet scale with known alpha: sigma^alpha = N / sum x^-alpha
inline double fit_frechet_scale(const std::vector<double>& xs, double alpha) {
    double s = 0.0;
    for (double x : xs) s += std::pow(x, -alpha);
    return std::pow(static_cast<double>(xs.size()) / s, 1.0 / alpha);
}

inline double freq_se(double p, std::size_t n) {
    return std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(n));
}

// ---------------------------------------------------------------- frechet

inline Result frechet_check(double alpha, double sigma, std::size_t reps,
                            std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "frechet-check";
    res.params = {{"alpha", alpha}, {"sigma", sigma}, {"reps", reps}, {"seed", seed}};
    FrechetLaw law(alpha, sigma);

    std::vector<double> xs(reps), maxes(reps);
    const int nmax = 7;
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 1), i);
        xs[i] = law.sample(rng);
        double m = 0.0;
        for (int k = 0; k < nmax; ++k) m = std::max(m, law.sample(rng));
        maxes[i] = m;
    });
    double ks = ks_statistic(xs, [&](double x) { return law.cdf(x); });
    FrechetLaw maxlaw(alpha, std::pow(static_cast<double>(nmax), 1.0 / alpha) * sigma);
    double ks_max = ks_statistic(maxes, [&](double x) { return maxlaw.cdf(x); });

    res.row({"statistic", "value"});
    res.row({"ks_sampler", fmt(ks)});
    res.row({"ks_max_stability", fmt(ks_max)});
    res.check_lt("sampler KS", ks, 0.01);
    res.check_lt("max-stability KS (n=7)", ks_max, 0.01);
    return res;
}

// --------------------------------------------------------------- overshoot

inline Result overshoot_check(std::size_t reps, std::uint64_t seed,
                              unsigned threads) {
    Result res;
    res.experiment = "overshoot-check";
    res.params = {{"reps", reps}, {"seed", seed}};
    res.row({"beta", "h", "statistic", "value"});

    // pdf normalization: quadrature on (0,cut) in the substituted variable
    // plus the analytic alternating tail series of int_cut^inf pdf
    double worst_norm = 0.0;
    for (double b : {0.2, 0.5, 0.8}) {
        for (double h : {0.5, 1.0, 3.0}) {
            OvershootLaw law(b, h);
            const double cut = 1e6 * h;
            auto f = [&](double v) {
                double y = std::pow(v, 1.0 / b);
                return law.pdf(y) * std::pow(y, 1.0 - b) / b;
            };
            double head = integrate(f, 0.0, std::pow(cut, b));
            double a = std::sin(pi * (1.0 - b)) / pi;
            double u = cut / h, tail = 0.0;
            for (int k = 0; k < 6; ++k)
                tail += (k % 2 ? -a : a) * std::pow(u, b - 1.0 - k) /
                        (1.0 + k - b);
            double err = std::abs(head + tail - 1.0);
            worst_norm = std::max(worst_norm, err);
            res.row({fmt(b), fmt(h), "norm_error", fmt(err)});
        }
    }
    res.check_lt("pdf normalization error", worst_norm, 1e-8);

    // sampler KS at beta = 1/2, h = 1
    OvershootLaw law(0.5, 1.0);
    std::vector<double> xs(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 2), i);
        xs[i] = law.sample(rng);
    });
    double ks = ks_statistic(xs, [&](double u) { return law.cdf(u); });
    res.row({"0.5", "1", "sampler_ks", fmt(ks)});
    res.check_lt("sampler KS", ks, 0.01);

    double closed = std::abs(law.cdf(1.0) - 0.5);
    res.row({"0.5", "1", "cdf1_error", fmt(closed)});
    res.check_lt("P(delta_1<=1)=1/2 error", closed, 1e-8);

    // scaling identity f_h(y) = f_1(y/h)/h
    OvershootLaw l1(0.7, 1.0), l2(0.7, 2.0);
    double sc = std::abs(l2.pdf(0.3) - l1.pdf(0.15) / 2.0);
    res.row({"0.7", "2", "pdf_scaling_error", fmt(sc)});
    res.check_lt("pdf scaling identity", sc, 1e-12);
    return res;
}

// ----------------------------------------------------------- shift identity

inline Result shift_identity(const std::vector<double>& betas,
                             const std::vector<std::array<double, 3>>& bcr) {
    Result res;
    res.experiment = "shift-identity";
    res.params = {{"betas", betas}};
    res.row({"beta", "b", "c", "r", "residual"});
    double worst = 0.0;
    for (double beta : betas)
        for (const auto& [b, c, r] : bcr) {
            double resd = shift_identity_residual(beta, b, c, r);
            worst = std::max(worst, resd);
            res.row({fmt(beta), fmt(b), fmt(c), fmt(r), fmt(resd)});
        }
    res.check_lt("max residual", worst, 1e-6);
    return res;
}

// ----------------------------------------------------------------- hit prob

inline Result hit_prob(std::size_t reps, std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "hit-prob";
    res.params = {{"reps", reps}, {"seed", seed}};
    res.row({"beta", "x", "a", "b", "mc", "closed", "abs_gap"});

    struct Case {
        double beta, x, a, b;
    };
    std::vector<Case> grid = {
        {0.3, 0.0, 1.0, 2.0}, {0.3, 0.0, 2.0, 4.0}, {0.3, 0.5, 1.0, 2.0},
        {0.3, 0.2, 0.5, 0.9}, {0.5, 0.0, 1.0, 2.0}, {0.5, 0.0, 0.5, 3.0},
        {0.5, 0.7, 1.5, 2.0}, {0.5, 0.1, 0.2, 0.6}, {0.7, 0.0, 1.0, 2.0},
        {0.7, 0.0, 3.0, 3.5}, {0.7, 0.4, 1.0, 1.5}, {0.7, 0.9, 2.0, 2.8},
    };

    double worst = 0.0;
    for (std::size_t ci = 0; ci < grid.size(); ++ci) {
        const auto& c = grid[ci];
        std::vector<std::uint8_t> hit(reps);
        IntervalUnion q{{c.a, c.b}};
        parallel_for(reps, threads, [&](std::size_t i) {
            Rng rng(phase_seed(seed, 10 + ci), i);
            hit[i] = probe_hits(c.beta, c.x, q, rng)[0];
        });
        double p = 0.0;
        for (auto h : hit) p += h;
        p /= static_cast<double>(reps);
        double cf = hit_prob_closed_form(c.beta, c.x, c.a, c.b);
        double gap = std::abs(p - cf);
        worst = std::max(worst, gap);
        res.row({fmt(c.beta), fmt(c.x), fmt(c.a), fmt(c.b), fmt(p), fmt(cf), fmt(gap)});
    }
    res.check_lt("max |MC - closed form|", worst, 0.01);

    // scale invariance: hitting frequency of (a,b) vs (ca,cb), x = 0
    const double cscale = 2.5, a0 = 1.0, b0 = 2.0, beta0 = 0.5;
    std::vector<std::uint8_t> h1(reps), h2(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng r1(phase_seed(seed, 40), i), r2(phase_seed(seed, 41), i);
        h1[i] = probe_hits(beta0, 0.0, IntervalUnion{{a0, b0}}, r1)[0];
        h2[i] = probe_hits(beta0, 0.0, IntervalUnion{{cscale * a0, cscale * b0}}, r2)[0];
    });
    double p1 = 0.0, p2 = 0.0;
    for (std::size_t i = 0; i < reps; ++i) {
        p1 += h1[i];
        p2 += h2[i];
    }
    p1 /= reps;
    p2 /= reps;
    double se = std::sqrt(freq_se(p1, reps) * freq_se(p1, reps) +
                          freq_se(p2, reps) * freq_se(p2, reps));
    res.row({fmt(beta0), "0", fmt(a0), fmt(b0), fmt(p1), fmt(p2), fmt(std::abs(p1 - p2))});
    res.check_lt("scale invariance |p - p_scaled| / (3 se)",
                 std::abs(p1 - p2) / (3.0 * se), 1.0);
    // exact: the closed form depends on (a,b) through b/a only
    double exact_gap = std::abs(hit_prob_closed_form(beta0, 0.0, a0, b0) -
                                hit_prob_closed_form(beta0, 0.0, cscale * a0, cscale * b0));
    res.check_lt("closed-form ratio invariance", exact_gap, 1e-14);
    return res;
}

// ---------------------------------------------------------------- W family

inline Result w_marginal(const std::vector<std::array<double, 3>>& abt,
                         std::size_t reps, std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "w-marginal";
    res.params = {{"reps", reps}, {"seed", seed}};
    res.row({"alpha", "beta", "t", "fitted_scale", "expected_scale", "rel_err"});
    double worst = 0.0;
    for (std::size_t ci = 0; ci < abt.size(); ++ci) {
        auto [alpha, beta, t] = abt[ci];
        std::vector<double> zs(reps);
        parallel_for(reps, threads, [&](std::size_t i) {
            Rng rng(phase_seed(seed, 100 + ci), i);
            zs[i] = simulate_Z(alpha, beta, {t}, rng)[0];
        });
        double fitted = fit_frechet_scale(zs, alpha);
        double expected = std::pow(t, beta / alpha);
        double rel = std::abs(fitted / expected - 1.0);
        worst = std::max(worst, rel);
        res.row({fmt(alpha), fmt(beta), fmt(t), fmt(fitted), fmt(expected), fmt(rel)});
    }
    res.check_lt("max relative scale error", worst, 0.02);
    return res;
}

inline Result w_joint(double alpha, double beta, std::size_t reps,
                      std::size_t oracle_reps, std::uint64_t seed,
                      unsigned threads) {
    Result res;
    res.experiment = "w-joint";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"reps", reps}, {"seed", seed}};
    IntervalUnion i1{{0.2, 0.6}}, i2{{0.9, 1.3}};
    std::vector<double> lam = {1.0, 1.5};
    const double T = 1.5;

    std::vector<std::uint8_t> below(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 200), i);
        auto w = simulate_W(alpha, beta, T, {i1, i2}, rng);
        below[i] = (w[0] <= lam[0] && w[1] <= lam[1]);
    });
    double emp = 0.0;
    for (auto b : below) emp += b;
    emp /= reps;

    Rng orng(phase_seed(seed, 201), 0);
    JointHitSpec spec(beta, IntervalUnion{{0.2, 0.6}, {0.9, 1.3}}, lam);
    double oracle = joint_cdf_oracle(spec, alpha, oracle_reps, orng);
    double se = freq_se(emp, reps);
    double gap = std::abs(emp - oracle);
    res.row({"emp_cdf", "oracle_cdf", "abs_gap", "mc_se"});
    res.row({fmt(emp), fmt(oracle), fmt(gap), fmt(se)});
    res.check_lt("joint cdf gap / (3 se + oracle tol)", gap / (3.0 * se + 0.01), 1.0);
    return res;
}

inline Result w_stationarity(double alpha, double beta, double r, std::size_t reps,
                             std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "w-stationarity";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"r", r}, {"reps", reps}, {"seed", seed}};
    const double a = 0.3, b = 0.8;
    const double T = r + b + 0.5;

    std::vector<double> w0(reps), wr(reps);
    std::vector<std::uint8_t> joint0(reps), jointr(reps);
    const double l1 = 1.0, l2 = 1.4;
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng r0(phase_seed(seed, 300), i), r1(phase_seed(seed, 301), i);
        auto v0 = simulate_W(alpha, beta, T,
                             {IntervalUnion{{a, b}}, IntervalUnion{{b + 0.1, b + 0.4}}}, r0);
        auto v1 = simulate_W(alpha, beta, T,
                             {IntervalUnion{{a + r, b + r}},
                              IntervalUnion{{b + r + 0.1, b + r + 0.4}}},
                             r1);
        w0[i] = v0[0];
        wr[i] = v1[0];
        joint0[i] = (v0[0] <= l1 && v0[1] <= l2);
        jointr[i] = (v1[0] <= l1 && v1[1] <= l2);
    });
    double ks = ks_two_sample(w0, wr);
    double p0 = 0.0, p1 = 0.0;
    for (std::size_t i = 0; i < reps; ++i) {
        p0 += joint0[i];
        p1 += jointr[i];
    }
    p0 /= reps;
    p1 /= reps;
    double se = std::sqrt(freq_se(p0, reps) * freq_se(p0, reps) +
                          freq_se(p1, reps) * freq_se(p1, reps));
    res.row({"ks_marginal", "joint_cdf_0", "joint_cdf_r", "abs_gap"});
    res.row({fmt(ks), fmt(p0), fmt(p1), fmt(std::abs(p0 - p1))});
    res.check_lt("shifted-marginal KS", ks, 0.01);
    res.check_lt("joint cdf shift gap / (3 se)", std::abs(p0 - p1) / (3.0 * se), 1.0);
    return res;
}

inline Result w_selfsim(double alpha, double beta, double scale, std::size_t reps,
                        std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "w-selfsim";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"scale", scale},
                  {"reps", reps}, {"seed", seed}};
    const double a = 0.4, b = 1.1;
    const double H = beta / alpha;

    std::vector<double> w1(reps), w2(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng r0(phase_seed(seed, 310), i), r1(phase_seed(seed, 311), i);
        w1[i] = simulate_W(alpha, beta, b, {IntervalUnion{{a, b}}}, r0)[0];
        w2[i] = simulate_W(alpha, beta, scale * b,
                           {IntervalUnion{{scale * a, scale * b}}}, r1)[0];
    });
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    double sfac = std::pow(scale, H);
    res.row({"p", "q_scaled", "q_base_times_cH", "ci_overlap"});
    bool all_ok = true;
    for (double p = 0.1; p < 0.95; p += 0.1) {
        auto c1 = quantile_ci(w1, p, 3.0);
        auto c2 = quantile_ci(w2, p, 3.0);
        bool ok = (c2.lo <= sfac * c1.hi) && (sfac * c1.lo <= c2.hi);
        all_ok = all_ok && ok;
        res.row({fmt(p), fmt(0.5 * (c2.lo + c2.hi)), fmt(sfac * 0.5 * (c1.lo + c1.hi)),
                 ok ? "1" : "0"});
    }
    res.check_true("quantile ratio matches H = beta/alpha (3 se)", all_ok);
    return res;
}

// ---------------------------------------------------------------- Z family

inline Result z_marginal(double alpha, double beta, double t, std::size_t reps,
                         std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "z-marginal";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"t", t}, {"reps", reps},
                  {"seed", seed}};
    std::vector<double> zs(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 400), i);
        zs[i] = simulate_Z(alpha, beta, {t}, rng)[0];
    });
    FrechetLaw law(alpha, std::pow(t, beta / alpha));
    double ks = ks_statistic(zs, [&](double x) { return law.cdf(x); });
    double fitted = fit_frechet_scale(zs, alpha);
    res.row({"fitted_scale", "expected_scale", "ks"});
    res.row({fmt(fitted), fmt(law.sigma()), fmt(ks)});
    res.check_lt("marginal KS", ks, 0.01);
    res.check_lt("relative scale error", std::abs(fitted / law.sigma() - 1.0), 0.02);
    return res;
}

inline Result z_joint(double alpha, double beta, double s, double t,
                      std::size_t reps, std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "z-joint";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"s", s}, {"t", t},
                  {"reps", reps}, {"seed", seed}};
    std::vector<std::array<double, 2>> probes = {{1.0, 2.0}, {0.8, 1.0}, {1.5, 1.5}};

    std::vector<std::array<double, 2>> zs(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 410), i);
        auto z = simulate_Z(alpha, beta, {s, t}, rng);
        zs[i] = {z[0], z[1]};
    });
    res.row({"lambda1", "lambda2", "emp_cdf", "oracle_cdf", "abs_gap"});
    double worst = 0.0;
    for (const auto& [l1, l2] : probes) {
        double emp = 0.0;
        for (const auto& z : zs) emp += (z[0] <= l1 && z[1] <= l2);
        emp /= reps;
        double oracle = z_joint_cdf_oracle(alpha, beta, {s, t}, {l1, l2});
        double gap = std::abs(emp - oracle);
        worst = std::max(worst, gap);
        res.row({fmt(l1), fmt(l2), fmt(emp), fmt(oracle), fmt(gap)});
    }
    res.check_lt("max joint cdf gap", worst, 0.01);
    return res;
}

inline Result z_gamma(double alpha, double beta, double gamma, double t,
                      std::size_t reps, std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "z-gamma";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"t", t},
                  {"reps", reps}, {"seed", seed}};
    GammaProcessParams p(alpha, beta, gamma); // throws if Eq-constraint violated
    const double H = p.hurst();

    std::vector<double> z1(reps), z2(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng r0(phase_seed(seed, 500), i), r1(phase_seed(seed, 501), i);
        z1[i] = simulate_Z_gamma(p, {t}, r0)[0];
        z2[i] = simulate_Z_gamma(p, {2.0 * t}, r1)[0];
    });
    std::sort(z1.begin(), z1.end());
    std::sort(z2.begin(), z2.end());
    double sfac = std::pow(2.0, H);
    res.row({"p", "q_2t", "q_t_times_2H", "ci_overlap"});
    bool all_ok = true;
    for (double prob = 0.1; prob < 0.95; prob += 0.1) {
        auto c1 = quantile_ci(z1, prob, 3.0);
        auto c2 = quantile_ci(z2, prob, 3.0);
        bool ok = (c2.lo <= sfac * c1.hi) && (sfac * c1.lo <= c2.hi);
        all_ok = all_ok && ok;
        res.row({fmt(prob), fmt(0.5 * (c2.lo + c2.hi)),
                 fmt(sfac * 0.5 * (c1.lo + c1.hi)), ok ? "1" : "0"});
    }
    res.check_true("H-self-similarity quantiles (H=gamma+beta/alpha, 3 se)", all_ok);

    // pathwise max-increment identity on W, exact per sample
    std::size_t id_reps = std::min<std::size_t>(reps, 2000);
    std::vector<std::uint8_t> exact(id_reps);
    parallel_for(id_reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 502), i);
        auto s = max_increment_shift_sample(alpha, beta, 0.3, {0.5, 1.0}, rng);
        bool ok = true;
        for (std::size_t k = 0; k < s.w_0t.size(); ++k) {
            double lhs = std::max(s.w_0r, s.w_shift[k]);
            ok = ok && (lhs == s.w_0rt[k]);
        }
        exact[i] = ok;
    });
    bool all_exact = true;
    for (auto e : exact) all_exact = all_exact && e;
    res.check_true("pathwise W((0,r]) v W((r,r+t]) = W((0,r+t])", all_exact);
    return res;
}

// -------------------------------------------------------------------- chain

inline Result chain_stats(double beta, double alpha, std::uint64_t n_large) {
    Result res;
    res.experiment = "chain-stats";
    res.params = {{"beta", beta}, {"alpha", alpha}, {"n_large", n_large}};
    ChainModel model(beta);

    double worst_balance = 0.0;
    for (std::uint64_t i = 0; i <= 1000; ++i) {
        double gap = std::abs(model.invariant_measure(i) -
                              (model.invariant_measure(i + 1) + model.p0(i)));
        worst_balance = std::max(worst_balance, gap);
    }
    res.check_lt("balance equation error (i <= 1000)", worst_balance, 1e-12);

    double ratio = model.bn_alpha(n_large) / model.wandering_rate(n_large);
    res.check_lt("|b_n^alpha / w_n - 1| at n_large", std::abs(ratio - 1.0), 0.01);

    // exact identity w_n - b_n^alpha = 1 - P_0(phi <= n) = tail(n)
    double idgap = 0.0;
    for (std::uint64_t n : {1ull, 10ull, 100ull, 10000ull}) {
        double lhs = model.wandering_rate(n) - model.bn_alpha(n);
        idgap = std::max(idgap, std::abs(lhs - model.p0_tail(n)));
    }
    res.check_lt("w_n - b_n^alpha identity error", idgap, 1e-10);

    // regular-variation slope diagnostics (asymptotic, tolerance-based)
    res.row({"n", "w_n", "w_n_over_n_beta", "return_tail_scaled"});
    std::vector<double> ratios;
    for (std::uint64_t n : {10000ull, 100000ull, 1000000ull}) {
        double w = model.wandering_rate(n);
        double sc = w / std::pow(static_cast<double>(n), beta);
        double rt = model.return_tail(n) * std::pow(static_cast<double>(n), 1.0 - beta);
        ratios.push_back(sc);
        res.row({std::to_string(n), fmt(w), fmt(sc), fmt(rt)});
    }
    double drift = std::abs(ratios.back() / ratios[ratios.size() - 2] - 1.0);
    res.check_lt("w_n/n^beta drift per decade", drift, 0.05);
    return res;
}

inline Result eta_sample(double beta, std::uint64_t n, std::size_t reps,
                         std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "eta-sample";
    res.params = {{"beta", beta}, {"n", n}, {"reps", reps}, {"seed", seed}};
    ChainModel model(beta);
    EtaSampler sampler(model, n);

    std::vector<std::uint32_t> start_count(n + 1, 0);
    std::vector<std::uint8_t> visited(reps);
    std::vector<std::uint32_t> start_slot(reps);
    parallel_for(reps, threads, [&](std::size_t i) {
        Rng rng(phase_seed(seed, 600), i);
        ChainPath path = sampler.sample_path(rng);
        start_slot[i] = static_cast<std::uint32_t>(path.states[0]);
        auto vs = path.visits();
        visited[i] = !vs.empty();
    });
    for (auto s : start_slot) ++start_count[std::min<std::uint32_t>(s, n)];

    bool all_visit = true;
    for (auto v : visited) all_visit = all_visit && v;
    res.check_true("every eta_n path visits 0 in 1..n", all_visit);

    // start-state frequencies vs the defining weights
    double bna = model.bn_alpha(n);
    double worst_z = 0.0;
    res.row({"state", "freq", "expected"});
    for (std::uint64_t i = 0; i <= std::min<std::uint64_t>(n, 10); ++i) {
        double expect = (i == 0 ? 1.0 - model.p0_tail(n) : model.invariant_measure(i)) / bna;
        double freq = static_cast<double>(start_count[i]) / reps;
        double z = std::abs(freq - expect) / freq_se(expect, reps);
        worst_z = std::max(worst_z, z);
        res.row({std::to_string(i), fmt(freq), fmt(expect)});
    }
    res.check_lt("start-state frequency worst z-score", worst_z, 4.0);
    return res;
}

inline Result renewal_range(double gamma, const std::vector<double>& thetas,
                            std::size_t reps, std::uint64_t seed, unsigned threads) {
    Result res;
    res.experiment = "renewal-range";
    res.params = {{"gamma", gamma}, {"thetas", thetas}, {"reps", reps}, {"seed", seed}};
    const double a = 1.0, b = 2.0;
    double oracle = hit_prob_closed_form(gamma, 0.0, a, b);

    res.row({"theta", "hit_freq", "oracle", "abs_gap"});
    std::vector<double> gaps;
    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
        double theta = thetas[ti];
        std::vector<std::uint8_t> hit(reps);
        parallel_for(reps, threads, [&](std::size_t i) {
            Rng rng(phase_seed(seed, 700 + ti), i);
            hit[i] = renewal_range_hits(gamma, theta, IntervalUnion{{a, b}}, rng)[0];
        });
        double p = 0.0;
        for (auto h : hit) p += h;
        p /= reps;
        gaps.push_back(std::abs(p - oracle));
        res.row({fmt(theta), fmt(p), fmt(oracle), fmt(gaps.back())});
    }
    res.check_lt("|freq - oracle| at largest theta", gaps.back(), 0.02);
    if (gaps.size() >= 2)
        res.check_true("gap decreases with theta", gaps.back() <= gaps.front());
    return res;
}

// --------------------------------------------------------------- Yn / SaS

inline Result yn_converge(double alpha, double beta,
                          const std::vector<std::uint64_t>& ns, std::size_t reps,
                          std::size_t oracle_reps, std::uint64_t seed,
                          unsigned threads,
                          std::vector<std::pair<double, double>> intervals =
                              {{0.015, 0.05}, {0.4, 0.6}},
                          std::vector<double> lam = {0.6, 1.0}) {
    Result res;
    res.experiment = "yn-converge";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"ns", ns}, {"reps", reps},
                  {"seed", seed}};
    ChainModel model(beta);

    Rng orng(phase_seed(seed, 800), 0);
    std::vector<IntervalUnion::Interval> ivs(intervals.begin(), intervals.end());
    JointHitSpec spec(beta, IntervalUnion(ivs), lam);
    double oracle = joint_cdf_oracle(spec, alpha, oracle_reps, orng);

    res.row({"n", "emp_cdf", "oracle_cdf", "abs_gap"});
    std::vector<double> gaps;
    for (std::uint64_t n : ns) {
        EtaSampler sampler(model, n);
        std::vector<std::uint8_t> below(reps);
        parallel_for(reps, threads, [&](std::size_t i) {
            Rng rng(phase_seed(seed, 801), i); // common streams across n
            auto v = simulate_Yn(sampler, alpha, intervals, rng);
            below[i] = (v[0] <= lam[0] && v[1] <= lam[1]);
        });
        double emp = 0.0;
        for (auto b : below) emp += b;
        emp /= reps;
        gaps.push_back(std::abs(emp - oracle));
        res.row({std::to_string(n), fmt(emp), fmt(oracle), fmt(gaps.back())});
    }
    res.check_lt("joint cdf gap at largest n", gaps.back(), 0.05);
    bool monotone = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        monotone = monotone && (gaps[i] <= gaps[i - 1]);
    res.check_true("gap decreases monotonically in n", monotone);
    return res;
}

inline Result sas_converge(double alpha, double beta,
                           const std::vector<std::uint64_t>& ns, std::size_t reps,
                           std::uint64_t seed, unsigned threads,
                           bool exploratory = false) {
    Result res;
    res.experiment = "sas-converge";
    res.params = {{"alpha", alpha}, {"beta", beta}, {"ns", ns}, {"reps", reps},
                  {"seed", seed}, {"exploratory", exploratory}};
    if (!(beta > 0.5 && beta < 1.0) && !exploratory)
        throw std::domain_error(
            "sas-converge: the convergence theorem requires 1/2 < beta < 1 "
            "(pass --exploratory to run outside the hypothesis)");
    ChainModel model(beta);
    FrechetLaw limit(alpha, std::pow(tail_constant(alpha), 1.0 / alpha));
    IntervalUnion full{{0.0, 1.0 + 1e-12}};

    res.row({"n", "ks_to_limit", "J"});
    std::vector<double> kss;
    for (std::uint64_t n : ns) {
        SeriesConfig cfg(model, alpha, n, 0, 0.05);
        EtaSampler sampler(model, n);
        double bn = model.bn(n, alpha);
        std::vector<double> ms(reps);
        parallel_for(reps, threads, [&](std::size_t i) {
            Rng rng(phase_seed(seed, 900), i); // common streams across n
            auto x = simulate_sas(cfg, sampler, rng);
            ms[i] = partial_max_measure(x, n, full) / bn;
        });
        double ks = ks_statistic(ms, [&](double x) { return limit.cdf(x); });
        kss.push_back(ks);
        res.row({std::to_string(n), fmt(ks), std::to_string(cfg.J)});
    }
    res.check_lt("KS at largest n", kss.back(), 0.1);
    bool monotone = true;
    for (std::size_t i = 1; i < kss.size(); ++i)
        monotone = monotone && (kss[i] <= kss[i - 1]);
    res.check_true("KS decreases in n", monotone);
    return res;
}

} // namespace rsup::experiments

#endif

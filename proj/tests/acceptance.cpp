// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rsup/experiments.hpp"

namespace ex = rsup::experiments;

namespace {

int failures = 0;

void report(int idx, const std::string& label, const ex::Result& r) {
    bool ok = r.pass();
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, label.c_str());
    for (const auto& c : r.checks)
        if (!c.pass)
            std::printf("         failed check: %s (value=%.6g, threshold=%.6g)\n",
                        c.name.c_str(), c.value, c.threshold);
}

void report_bool(int idx, const std::string& label, bool ok) {
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, label.c_str());
}

} // namespace

int main() {
    const std::uint64_t seed = 987654321;
    const unsigned threads = 1;

    // 1. shift-invariance identity over the default grid
    report(1, "shift-invariance identity residual < 1e-6 on the 5x3 grid",
           ex::shift_identity({0.2, 0.35, 0.5, 0.65, 0.8},
                              {{{1.0, 2.0, 0.7}, {0.5, 3.0, 1.5}, {2.0, 2.5, 0.3}}}));

    // 2. overshoot law
    report(2, "overshoot pdf normalization 1e-8, sampler KS < 0.01, cdf(1) = 1/2",
           ex::overshoot_check(100000, seed, threads));

    // 3. range hitting
    report(3, "probe vs closed form within 0.01 on 12-point grid; scale invariance",
           ex::hit_prob(100000, seed, threads));

    // 4. W marginal scale
    report(4, "W((0,t]) Frechet scale = t^(beta/alpha) within 2% for 3 parameter sets",
           ex::w_marginal({{1.0, 0.5, 1.0}, {1.5, 0.6, 0.7}, {0.8, 0.3, 2.0}},
                          100000, seed, threads));

    // 5. stationarity and self-similarity
    {
        auto stat = ex::w_stationarity(1.0, 0.5, 0.4, 100000, seed, threads);
        auto self = ex::w_selfsim(1.0, 0.5, 2.0, 10000, seed, threads);
        bool ok = stat.pass() && self.pass();
        report_bool(5, "W stationarity (KS < 0.01) and H = beta/alpha self-similarity", ok);
        for (const auto* r : {&stat, &self})
            for (const auto& c : r->checks)
                if (!c.pass)
                    std::printf("         failed check: %s (value=%.6g)\n",
                                c.name.c_str(), c.value);
    }

    // 6. Z joint law vs extremal-process oracle
    report(6, "Z joint cdf within 0.01 of the oracle at (alpha=1, beta=0.5, s=0.5, t=1)",
           ex::z_joint(1.0, 0.5, 0.5, 1.0, 100000, seed, threads));

    // 7. Y^(n) convergence
    report(7, "Y^(n) joint cdf gap decreasing over n in {1e2,1e3,1e4}, < 0.05 at 1e4",
           ex::yn_converge(1.2, 0.6, {100, 1000, 10000}, 10000, 40000, seed, threads));

    // 8. renewal range
    report(8, "renewal-range hit freq within 0.02 of 1/2 at theta = 1e4, gap decreasing",
           ex::renewal_range(0.5, {100.0, 10000.0}, 100000, seed, threads));

    // 9. stable-series partial maxima
    {
        auto r = ex::sas_converge(1.2, 0.7, {1024, 4096, 16384}, 2000, seed, threads);
        bool rejected = false;
        try {
            ex::sas_converge(1.2, 0.4, {64}, 1, seed, threads);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        bool ok = r.pass() && rejected;
        report_bool(9, "series max KS to Frechet(alpha, C^(1/alpha)) decreasing, "
                       "< 0.1 at n=2^14; beta=0.4 rejected", ok);
        for (const auto& c : r.checks)
            if (!c.pass)
                std::printf("         failed check: %s (value=%.6g)\n", c.name.c_str(),
                            c.value);
        if (!rejected) std::printf("         beta = 0.4 was not rejected\n");
    }

    // 10. gap-weighted process
    {
        bool rejected = false;
        try {
            ex::z_gamma(1.0, 0.5, 0.6, 1.0, 1, seed, threads);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        auto r = ex::z_gamma(1.5, 0.5, 0.2, 1.0, 10000, seed, threads);
        bool ok = r.pass() && rejected;
        report_bool(10, "gamma constraint enforced; H = gamma+beta/alpha quantiles; "
                        "pathwise max-increment identity", ok);
        for (const auto& c : r.checks)
            if (!c.pass)
                std::printf("         failed check: %s (value=%.6g)\n", c.name.c_str(),
                            c.value);
        if (!rejected) std::printf("         gamma constraint was not enforced\n");
    }

    // 11. chain arithmetic
    report(11, "balance equations to 1e-12; b_n^alpha/w_n within 1% at n = 1e6",
           ex::chain_stats(0.5, 1.0, 1000000));

    // 12. determinism across thread counts, byte-identical artifacts
    {
        std::vector<std::function<ex::Result(unsigned)>> runners = {
            [&](unsigned t) { return ex::frechet_check(1.2, 1.0, 5000, seed, t); },
            [&](unsigned t) { return ex::overshoot_check(5000, seed, t); },
            [&](unsigned t) { return ex::hit_prob(3000, seed, t); },
            [&](unsigned t) {
                return ex::w_marginal({{1.0, 0.5, 1.0}}, 5000, seed, t);
            },
            [&](unsigned t) { return ex::w_joint(1.0, 0.5, 3000, 2000, seed, t); },
            [&](unsigned t) { return ex::w_stationarity(1.0, 0.5, 0.4, 5000, seed, t); },
            [&](unsigned t) { return ex::w_selfsim(1.0, 0.5, 2.0, 4000, seed, t); },
            [&](unsigned t) { return ex::z_marginal(1.5, 0.6, 0.7, 5000, seed, t); },
            [&](unsigned t) { return ex::z_joint(1.0, 0.5, 0.5, 1.0, 5000, seed, t); },
            [&](unsigned t) { return ex::z_gamma(1.5, 0.5, 0.2, 1.0, 1500, seed, t); },
            [&](unsigned t) {
                (void)t;
                return ex::chain_stats(0.5, 1.0, 100000);
            },
            [&](unsigned t) { return ex::eta_sample(0.5, 50, 5000, seed, t); },
            [&](unsigned t) {
                return ex::yn_converge(1.2, 0.6, {100, 500}, 1500, 2000, seed, t);
            },
            [&](unsigned t) {
                return ex::renewal_range(0.5, {100.0, 1000.0}, 3000, seed, t);
            },
            [&](unsigned t) {
                return ex::sas_converge(1.2, 0.7, {256, 512}, 300, seed, t);
            },
            [&](unsigned t) { return ex::shift_identity({0.5}, {{{1.0, 2.0, 0.7}}}); },
        };
        bool ok = true;
        for (auto& fn : runners) {
            auto a = fn(1);
            auto b = fn(4);
            if (ex::csv_text(a) != ex::csv_text(b) ||
                a.summary().dump() != b.summary().dump()) {
                ok = false;
                std::printf("         non-deterministic: %s\n", a.experiment.c_str());
            }
        }
        report_bool(12, "byte-identical artifacts across thread counts for every "
                        "experiment", ok);
    }

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}

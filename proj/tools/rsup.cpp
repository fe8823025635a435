// Command-line driver: one subcommand per verification experiment. Each run
// writes results.csv and summary.json under --out and exits 0 when every
// check passes, 1 when a check fails, 2 on invalid configuration.
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsup/experiments.hpp"

namespace ex = rsup::experiments;

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("RSUP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo verification harness for stable-range sup "
                 "measures, extremal processes and long-memory stable series"};
    app.require_subcommand(1);

    std::uint64_t seed = 20240801;
    unsigned threads = default_threads();
    std::string out = "out";
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_option("--out", out, "output directory")->capture_default_str();

    auto alpha_check = CLI::Range(1e-9, 2.0 - 1e-12); // stability: alpha in (0,2)
    auto beta_check = CLI::Range(1e-9, 1.0 - 1e-12);  // beta in (0,1)

    std::function<ex::Result()> run;

    // ---- frechet-check
    {
        auto* c = app.add_subcommand("frechet-check", "Frechet sampler and max-stability");
        auto alpha = std::make_shared<double>(1.2);
        auto sigma = std::make_shared<double>(1.0);
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--sigma", *sigma)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, sigma, reps] {
            run = [=, &seed, &threads] {
                return ex::frechet_check(*alpha, *sigma, *reps, seed, threads);
            };
        });
    }

    // ---- overshoot-check
    {
        auto* c = app.add_subcommand("overshoot-check", "overshoot law: pdf, cdf, sampler");
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, reps] {
            run = [=, &seed, &threads] { return ex::overshoot_check(*reps, seed, threads); };
        });
    }

    // ---- shift-identity
    {
        auto* c = app.add_subcommand("shift-identity", "shift-invariance integral identity");
        auto beta = std::make_shared<double>(0.0);
        auto b = std::make_shared<double>(1.0);
        auto cc = std::make_shared<double>(2.0);
        auto r = std::make_shared<double>(0.7);
        auto* ob = c->add_option("--beta", *beta)->check(beta_check);
        c->add_option("--b", *b)->check(CLI::PositiveNumber);
        c->add_option("--c", *cc)->check(CLI::PositiveNumber);
        c->add_option("--r", *r)->check(CLI::PositiveNumber);
        c->callback([&, beta, b, cc, r, ob] {
            run = [=] {
                if (ob->count() > 0)
                    return ex::shift_identity({*beta}, {{{*b, *cc, *r}}});
                return ex::shift_identity({0.2, 0.35, 0.5, 0.65, 0.8},
                                          {{{1.0, 2.0, 0.7},
                                            {0.5, 3.0, 1.5},
                                            {2.0, 2.5, 0.3}}});
            };
        });
    }

    // ---- hit-prob
    {
        auto* c = app.add_subcommand("hit-prob", "range hitting: probe vs closed form");
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, reps] {
            run = [=, &seed, &threads] { return ex::hit_prob(*reps, seed, threads); };
        });
    }

    // ---- w-marginal
    {
        auto* c = app.add_subcommand("w-marginal", "W((0,t]) marginal Frechet scale");
        auto alpha = std::make_shared<double>(0.0);
        auto beta = std::make_shared<double>(0.5);
        auto t = std::make_shared<double>(1.0);
        auto reps = std::make_shared<std::size_t>(100000);
        auto* oa = c->add_option("--alpha", *alpha)->check(alpha_check);
        c->add_option("--beta", *beta)->check(beta_check);
        c->add_option("--t", *t)->check(CLI::PositiveNumber);
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, t, reps, oa] {
            run = [=, &seed, &threads] {
                std::vector<std::array<double, 3>> sets;
                if (oa->count() > 0)
                    sets = {{*alpha, *beta, *t}};
                else
                    sets = {{1.0, 0.5, 1.0}, {1.5, 0.6, 0.7}, {0.8, 0.3, 2.0}};
                return ex::w_marginal(sets, *reps, seed, threads);
            };
        });
    }

    // ---- w-joint
    {
        auto* c = app.add_subcommand("w-joint", "W joint cdf vs quadrature oracle");
        auto alpha = std::make_shared<double>(1.0);
        auto beta = std::make_shared<double>(0.5);
        auto reps = std::make_shared<std::size_t>(100000);
        auto oreps = std::make_shared<std::size_t>(40000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->add_option("--oracle-reps", *oreps)->capture_default_str();
        c->callback([&, alpha, beta, reps, oreps] {
            run = [=, &seed, &threads] {
                return ex::w_joint(*alpha, *beta, *reps, *oreps, seed, threads);
            };
        });
    }

    // ---- w-stationarity
    {
        auto* c = app.add_subcommand("w-stationarity", "shift invariance of W");
        auto alpha = std::make_shared<double>(1.0);
        auto beta = std::make_shared<double>(0.5);
        auto r = std::make_shared<double>(0.4);
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--r", *r)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, r, reps] {
            run = [=, &seed, &threads] {
                return ex::w_stationarity(*alpha, *beta, *r, *reps, seed, threads);
            };
        });
    }

    // ---- w-selfsim
    {
        auto* c = app.add_subcommand("w-selfsim", "self-similarity with H = beta/alpha");
        auto alpha = std::make_shared<double>(1.0);
        auto beta = std::make_shared<double>(0.5);
        auto scale = std::make_shared<double>(2.0);
        auto reps = std::make_shared<std::size_t>(10000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--scale", *scale)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, scale, reps] {
            run = [=, &seed, &threads] {
                return ex::w_selfsim(*alpha, *beta, *scale, *reps, seed, threads);
            };
        });
    }

    // ---- z-marginal
    {
        auto* c = app.add_subcommand("z-marginal", "Z(t) marginal law");
        auto alpha = std::make_shared<double>(1.5);
        auto beta = std::make_shared<double>(0.6);
        auto t = std::make_shared<double>(0.7);
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--t", *t)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, t, reps] {
            run = [=, &seed, &threads] {
                return ex::z_marginal(*alpha, *beta, *t, *reps, seed, threads);
            };
        });
    }

    // ---- z-joint
    {
        auto* c = app.add_subcommand("z-joint", "Z f.d.d. vs extremal-process oracle");
        auto alpha = std::make_shared<double>(1.0);
        auto beta = std::make_shared<double>(0.5);
        auto s = std::make_shared<double>(0.5);
        auto t = std::make_shared<double>(1.0);
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--s", *s)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--t", *t)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, s, t, reps] {
            run = [=, &seed, &threads] {
                if (!(*s < *t))
                    throw std::invalid_argument("z-joint: need s < t");
                return ex::z_joint(*alpha, *beta, *s, *t, *reps, seed, threads);
            };
        });
    }

    // ---- z-gamma
    {
        auto* c = app.add_subcommand("z-gamma", "gap-weighted process: constraint, "
                                                "self-similarity, max-increments");
        auto alpha = std::make_shared<double>(1.5);
        auto beta = std::make_shared<double>(0.5);
        auto gamma = std::make_shared<double>(0.2);
        auto t = std::make_shared<double>(1.0);
        auto reps = std::make_shared<std::size_t>(10000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--gamma", *gamma)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--t", *t)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, alpha, beta, gamma, t, reps] {
            run = [=, &seed, &threads] {
                return ex::z_gamma(*alpha, *beta, *gamma, *t, *reps, seed, threads);
            };
        });
    }

    // ---- chain-stats
    {
        auto* c = app.add_subcommand("chain-stats", "chain arithmetic: balance, w_n, b_n");
        auto beta = std::make_shared<double>(0.5);
        auto alpha = std::make_shared<double>(1.0);
        auto n = std::make_shared<std::uint64_t>(1000000);
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--n", *n)->check(CLI::PositiveNumber)->capture_default_str();
        c->callback([&, beta, alpha, n] {
            run = [=] { return ex::chain_stats(*beta, *alpha, *n); };
        });
    }

    // ---- eta-sample
    {
        auto* c = app.add_subcommand("eta-sample", "eta_n path sampler diagnostics");
        auto beta = std::make_shared<double>(0.5);
        auto n = std::make_shared<std::uint64_t>(50);
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--n", *n)->check(CLI::PositiveNumber)->capture_default_str();
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, beta, n, reps] {
            run = [=, &seed, &threads] {
                return ex::eta_sample(*beta, *n, *reps, seed, threads);
            };
        });
    }

    // ---- yn-converge
    {
        auto* c = app.add_subcommand("yn-converge", "Y^(n) joint cdf convergence");
        auto alpha = std::make_shared<double>(1.2);
        auto beta = std::make_shared<double>(0.6);
        auto ns = std::make_shared<std::vector<std::uint64_t>>(
            std::vector<std::uint64_t>{100, 1000, 10000});
        auto reps = std::make_shared<std::size_t>(10000);
        auto oreps = std::make_shared<std::size_t>(40000);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--ns", *ns, "horizons, increasing");
        c->add_option("--reps", *reps)->capture_default_str();
        c->add_option("--oracle-reps", *oreps)->capture_default_str();
        c->callback([&, alpha, beta, ns, reps, oreps] {
            run = [=, &seed, &threads] {
                return ex::yn_converge(*alpha, *beta, *ns, *reps, *oreps, seed, threads);
            };
        });
    }

    // ---- renewal-range
    {
        auto* c = app.add_subcommand("renewal-range", "scaled renewal range hitting");
        auto gamma = std::make_shared<double>(0.5);
        auto thetas = std::make_shared<std::vector<double>>(std::vector<double>{100.0, 10000.0});
        auto reps = std::make_shared<std::size_t>(100000);
        c->add_option("--gamma", *gamma)->check(beta_check)->capture_default_str();
        c->add_option("--thetas", *thetas, "scales, increasing");
        c->add_option("--reps", *reps)->capture_default_str();
        c->callback([&, gamma, thetas, reps] {
            run = [=, &seed, &threads] {
                return ex::renewal_range(*gamma, *thetas, *reps, seed, threads);
            };
        });
    }

    // ---- sas-converge
    {
        auto* c = app.add_subcommand("sas-converge", "partial maxima of the stable series");
        auto alpha = std::make_shared<double>(1.2);
        auto beta = std::make_shared<double>(0.7);
        auto ns = std::make_shared<std::vector<std::uint64_t>>(
            std::vector<std::uint64_t>{1024, 4096, 16384});
        auto reps = std::make_shared<std::size_t>(2000);
        auto exploratory = std::make_shared<bool>(false);
        c->add_option("--alpha", *alpha)->check(alpha_check)->capture_default_str();
        c->add_option("--beta", *beta)->check(beta_check)->capture_default_str();
        c->add_option("--ns", *ns, "series lengths, increasing");
        c->add_option("--reps", *reps)->capture_default_str();
        c->add_flag("--exploratory", *exploratory,
                    "allow beta outside (1/2,1), where the limit theorem does not apply");
        c->callback([&, alpha, beta, ns, reps, exploratory] {
            run = [=, &seed, &threads] {
                return ex::sas_converge(*alpha, *beta, *ns, *reps, seed, threads,
                                        *exploratory);
            };
        });
    }

    // allow --seed/--threads/--out after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ex::Result result = run();
        ex::write_artifacts(result, out + "/" + result.experiment);
        for (const auto& c : result.checks)
            std::printf("[%s] %s: value=%.6g threshold=%.6g\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.threshold);
        return result.pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return 2;
    }
}

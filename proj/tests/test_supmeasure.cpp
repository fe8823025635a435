#include <doctest.h>

#include "rsup/supmeasure.hpp"
#include "rsup/verify.hpp"

using namespace rsup;

TEST_CASE("interval union validation and queries") {
    IntervalUnion q{{0.5, 1.0}, {2.0, 3.0}};
    CHECK(q.size() == 2);
    CHECK(q.sup() == 3.0);
    CHECK(q.contains(0.7));
    CHECK_FALSE(q.contains(1.0)); // open intervals
    CHECK_FALSE(q.contains(1.5));
    CHECK(q.shifted(1.0).contains(1.7));
    CHECK(q.scaled(2.0).contains(5.0));
    CHECK_THROWS_AS(IntervalUnion({{1.0, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalUnion({{0.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
    CHECK(IntervalUnion{}.empty());
}

TEST_CASE("grid sup measure axioms and hand values") {
    GridSupMeasure m({0.0, 1.0, 2.0, 3.0}, {2.0, 5.0, 1.0});
    CHECK(m.measure(IntervalUnion{{0.2, 0.8}}) == 2.0);
    CHECK(m.measure(IntervalUnion{{0.5, 1.5}}) == 5.0);
    CHECK(m.measure(IntervalUnion{{0.2, 0.4}, {2.5, 2.9}}) == 2.0);
    CHECK(m.measure(IntervalUnion{{5.0, 6.0}}) == 0.0);
    // sup measure of a union is the max over parts
    auto a = IntervalUnion{{0.1, 0.9}};
    auto b = IntervalUnion{{1.1, 1.9}};
    auto ab = IntervalUnion{{0.1, 0.9}, {1.1, 1.9}};
    CHECK(m.measure(ab) == std::max(m.measure(a), m.measure(b)));
    // monotone in the set argument
    CHECK(m.measure(IntervalUnion{{0.2, 0.3}}) <= m.measure(IntervalUnion{{0.1, 1.4}}));
}

TEST_CASE("sup derivative and sup integral round trip") {
    GridSupMeasure m({0.0, 1.0, 2.0, 3.0}, {2.0, 5.0, 1.0});
    CHECK(m.sup_derivative(0.5) == 2.0);
    CHECK(m.sup_derivative(1.0) == 5.0); // u.s.c. at the shared grid point
    CHECK(m.sup_derivative(2.0) == 5.0);
    CHECK(m.sup_derivative(7.0) == 0.0);
    CHECK(m.sup_integral(IntervalUnion{{0.5, 2.5}}) ==
          m.measure(IntervalUnion{{0.5, 2.5}}));
    CHECK_THROWS_AS(GridSupMeasure({0.0, 1.0}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridSupMeasure({1.0, 0.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("simulate_W validates inputs and returns zero on empty queries") {
    Rng rng(3, 0);
    CHECK_THROWS_AS(simulate_W(1.0, 0.5, 1.0, {IntervalUnion{{0.5, 2.0}}}, rng),
                    std::domain_error);
    CHECK_THROWS_AS(simulate_W(1.0, 1.5, 1.0, {}, rng), std::invalid_argument);
    auto v = simulate_W(1.0, 0.5, 1.0, {IntervalUnion{}}, rng);
    CHECK(v[0] == 0.0); // W(empty) = 0
}

TEST_CASE("simulate_W is monotone and subadditive per sample") {
    Rng rng(8, 0);
    for (int rep = 0; rep < 200; ++rep) {
        auto v = simulate_W(1.2, 0.5, 2.0,
                            {IntervalUnion{{0.2, 0.8}}, IntervalUnion{{1.0, 1.6}},
                             IntervalUnion{{0.2, 0.8}, {1.0, 1.6}}},
                            rng);
        CHECK(v[2] == std::max(v[0], v[1])); // exact per realization
        CHECK(v[0] > 0.0);
    }
}

TEST_CASE("simulate_W marginal on (0,t] is Frechet with scale t^(beta/alpha)") {
    const double alpha = 1.0, beta = 0.5, t = 0.8;
    std::vector<double> xs(20000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rng rng(17, i);
        xs[i] = simulate_W(alpha, beta, t, {IntervalUnion{{0.0, t}}}, rng)[0];
    }
    FrechetLaw law(alpha, std::pow(t, beta / alpha));
    CHECK(ks_statistic(xs, [&](double x) { return law.cdf(x); }) < 0.015);
}

TEST_CASE("exact stopping: extending the point stream never changes values") {
    for (std::size_t i = 0; i < 200; ++i) {
        Rng a(23, i), b(23, i); // identical streams
        std::vector<IntervalUnion> q = {IntervalUnion{{0.3, 0.6}},
                                        IntervalUnion{{0.8, 1.4}}};
        SimulateOptions more;
        more.min_points = 64; // force generation far past resolution
        auto v1 = simulate_W(1.1, 0.6, 1.5, q, a);
        auto v2 = simulate_W(1.1, 0.6, 1.5, q, b, more);
        CHECK(v1[0] == v2[0]);
        CHECK(v1[1] == v2[1]);
    }
}

TEST_CASE("simulate_Z is nondecreasing and matches the t^beta time change") {
    Rng rng(29, 0);
    for (int rep = 0; rep < 100; ++rep) {
        auto z = simulate_Z(1.5, 0.4, {0.5, 1.0, 2.0}, rng);
        CHECK(z[0] <= z[1]);
        CHECK(z[1] <= z[2]);
    }
    CHECK_THROWS_AS(simulate_Z(1.5, 0.4, {1.0, 0.5}, rng), std::invalid_argument);
}

TEST_CASE("gamma process parameter constraint") {
    CHECK_NOTHROW(GammaProcessParams(1.5, 0.5, 0.2));
    CHECK_THROWS_AS(GammaProcessParams(1.5, 0.5, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(GammaProcessParams(1.5, 0.5, 0.0), std::invalid_argument);
    CHECK(GammaProcessParams(1.5, 0.5, 0.2).hurst() ==
          doctest::Approx(0.2 + 0.5 / 1.5).epsilon(1e-15));
}

TEST_CASE("simulate_Z_gamma produces positive ordered-time samples") {
    GammaProcessParams p(1.5, 0.5, 0.2);
    Rng rng(33, 0);
    for (int rep = 0; rep < 50; ++rep) {
        auto z = simulate_Z_gamma(p, {0.5, 1.0}, rng);
        CHECK(z[0] > 0.0);
        CHECK(z[1] > 0.0);
    }
    CHECK_THROWS_AS(simulate_Z_gamma(p, {1.0, 0.5}, rng), std::invalid_argument);
}

TEST_CASE("max increment identity holds pathwise") {
    for (std::size_t i = 0; i < 300; ++i) {
        Rng rng(41, i);
        auto s = max_increment_shift_sample(1.0, 0.5, 0.4, {0.3, 0.9}, rng);
        for (std::size_t k = 0; k < s.w_0t.size(); ++k)
            CHECK(std::max(s.w_0r, s.w_shift[k]) == s.w_0rt[k]);
    }
}

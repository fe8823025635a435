#include <doctest.h>

#include "rsup/verify.hpp"

using namespace rsup;

TEST_CASE("quadrature sanity") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 20.0) ==
          doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-12));
}

TEST_CASE("kappa hit mass basic properties") {
    // mass of {F hits (b,c)} grows with c and shrinks with b
    double m1 = kappa_hit_mass(0.5, 1.0, 2.0);
    double m2 = kappa_hit_mass(0.5, 1.0, 3.0);
    double m3 = kappa_hit_mass(0.5, 1.5, 2.0);
    CHECK(m1 > 0.0);
    CHECK(m2 > m1);
    CHECK(m3 < m1);
    // lower bound: the guaranteed-hit region alone contributes c^b - b^b
    CHECK(m1 > std::pow(2.0, 0.5) - 1.0);
    CHECK_THROWS_AS(kappa_hit_mass(0.5, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("shift identity residual vanishes across parameters") {
    for (double beta : {0.25, 0.5, 0.75})
        for (double r : {0.1, 1.0, 5.0})
            CHECK(shift_identity_residual(beta, 0.7, 1.9, r) < 1e-7);
    CHECK_THROWS_AS(shift_identity_residual(0.5, 1.0, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("single interval oracle closed form") {
    Rng rng(1, 0);
    // interval (0,b): mass is b^beta, so cdf = exp(-lambda^-alpha b^beta)
    JointHitSpec s(0.5, IntervalUnion{{0.0, 4.0}}, {2.0});
    CHECK(joint_cdf_oracle(s, 1.0, 0, rng) ==
          doctest::Approx(std::exp(-0.5 * 2.0)).epsilon(1e-12));
    JointHitSpec s2(0.5, IntervalUnion{{1.0, 2.0}}, {1.0});
    CHECK(joint_cdf_oracle(s2, 1.0, 0, rng) ==
          doctest::Approx(std::exp(-kappa_hit_mass(0.5, 1.0, 2.0))).epsilon(1e-12));
}

TEST_CASE("two-interval oracle closes over the single-interval marginal") {
    // lambda_2 -> infinity removes the second constraint
    Rng rng(2, 0);
    JointHitSpec joint(0.5, IntervalUnion{{1.0, 2.0}, {3.0, 4.0}}, {1.2, 1e9});
    JointHitSpec single(0.5, IntervalUnion{{1.0, 2.0}}, {1.2});
    double pj = joint_cdf_oracle(joint, 1.0, 40000, rng);
    double ps = joint_cdf_oracle(single, 1.0, 0, rng);
    CHECK(pj == doctest::Approx(ps).epsilon(0.02));
    CHECK_THROWS_AS(JointHitSpec(0.5, IntervalUnion{{1.0, 2.0}}, {1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("extremal process fdd closed form") {
    // single time: P(M(t) <= l) = exp(-sigma^a t l^-a)
    CHECK(extremal_fdd(1.0, 1.0, {2.0}, {1.0}) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
    // two times with l2 -> inf reduces to the first marginal
    CHECK(extremal_fdd(1.0, 1.0, {1.0, 2.0}, {1.0, 1e12}) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    // nondecreasing lambda thresholds: hand value
    // -ln P = t1 min(l1,l2)^-a + (t2-t1) l2^-a
    double p = extremal_fdd(1.0, 1.0, {1.0, 2.0}, {1.0, 2.0});
    CHECK(p == doctest::Approx(std::exp(-(1.0 + 0.5))).epsilon(1e-13));
    CHECK_THROWS_AS(extremal_fdd(1.0, 1.0, {2.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("z joint oracle arithmetic example") {
    // alpha=1, beta=1/2, times (1/2, 1), lambdas (1, 2):
    // -ln P = sqrt(1/2) * 1 + (1 - sqrt(1/2)) * 1/2
    double expnt = std::sqrt(0.5) + (1.0 - std::sqrt(0.5)) * 0.5;
    CHECK(z_joint_cdf_oracle(1.0, 0.5, {0.5, 1.0}, {1.0, 2.0}) ==
          doctest::Approx(std::exp(-expnt)).epsilon(1e-13));
}

TEST_CASE("ks statistic on hand samples") {
    // empirical {0.25, 0.75} against U(0,1): D = 0.25
    CHECK(ks_statistic({0.25, 0.75}, [](double x) { return x; }) ==
          doctest::Approx(0.25).epsilon(1e-13));
    CHECK_THROWS_AS(ks_statistic({}, [](double x) { return x; }), std::invalid_argument);
    // two-sample on disjoint supports is 1
    CHECK(ks_two_sample({0.1, 0.2}, {0.8, 0.9}) == doctest::Approx(1.0));
}

TEST_CASE("quantile ci brackets the true quantile") {
    std::vector<double> xs(10000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rng rng(7, i);
        xs[i] = rng.uniform();
    }
    std::sort(xs.begin(), xs.end());
    for (double p : {0.1, 0.5, 0.9}) {
        auto ci = quantile_ci(xs, p, 3.0);
        CHECK(ci.lo <= p);
        CHECK(ci.hi >= p);
        CHECK(ci.hi - ci.lo < 0.05);
    }
}

#include <doctest.h>

#include "rsup/dist.hpp"
#include "rsup/rng.hpp"
#include "rsup/verify.hpp"

using namespace rsup;

TEST_CASE("frechet cdf and quantile") {
    FrechetLaw law(1.5, 2.0);
    CHECK(law.cdf(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(law.cdf(0.0) == 0.0);
    // quantile inverts cdf
    for (double p : {0.01, 0.3, 0.5, 0.9, 0.999})
        CHECK(law.cdf(law.quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    CHECK_THROWS_AS(FrechetLaw(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FrechetLaw(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("frechet max-stability: max of n iid has scale n^(1/alpha) sigma") {
    FrechetLaw law(0.8, 1.3);
    // F^n(x) = F(x / n^{1/alpha}) after rescaling the scale parameter
    FrechetLaw maxlaw(0.8, std::pow(5.0, 1.0 / 0.8) * 1.3);
    for (double x : {0.5, 1.0, 4.0, 20.0})
        CHECK(std::pow(law.cdf(x), 5.0) == doctest::Approx(maxlaw.cdf(x)).epsilon(1e-13));
}

TEST_CASE("frechet sampler matches its cdf") {
    FrechetLaw law(1.2, 0.7);
    Rng rng(42, 0);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = law.sample(rng);
    CHECK(ks_statistic(xs, [&](double x) { return law.cdf(x); }) < 0.015);
}

TEST_CASE("tail constant values and quadrature oracle") {
    CHECK(tail_constant(1.0) == doctest::Approx(2.0 / pi).epsilon(1e-14));
    // C_alpha = ( int_0^inf x^-alpha sin x dx )^-1. After one integration
    // by parts the integral is a int_0^inf x^{-a-1}(1-cos x) dx; split at U
    // and expand the oscillatory tail once more, leaving O(U^{-a-2}).
    for (double a : {0.4, 0.9, 1.3, 1.8}) {
        const double U = 200.0;
        // singular piece on (0,1) from the cosine series, term by term
        double I = 0.0, fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            I += (k % 2 ? 1.0 : -1.0) * a / (fact * (2.0 * k - a));
        }
        auto f = [&](double x) {
            return a * std::pow(x, -a - 1.0) * (1.0 - std::cos(x));
        };
        I += integrate(f, 1.0, U) + std::pow(U, -a) +
             a * std::pow(U, -a - 1.0) * std::sin(U);
        CHECK(tail_constant(a) == doctest::Approx(1.0 / I).epsilon(1e-5));
    }
    CHECK_THROWS_AS(tail_constant(2.0), std::domain_error);
    CHECK_THROWS_AS(tail_constant(0.0), std::domain_error);
}

TEST_CASE("overshoot density closed-form points") {
    OvershootLaw law(0.5, 1.0);
    // f(y) = (1/pi) (1+y)^{-1} y^{-1/2} at h = 1, beta = 1/2
    CHECK(law.pdf(1.0) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-13));
    CHECK(law.cdf(1.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(law.pdf(-1.0), std::domain_error);
    CHECK_THROWS_AS(OvershootLaw(0.5, -1.0), std::invalid_argument);
    CHECK(OvershootLaw(0.5, 0.0).cdf(0.1) == 1.0); // degenerate level
}

TEST_CASE("overshoot cdf is the integral of the pdf") {
    for (double b : {0.25, 0.6, 0.85}) {
        OvershootLaw law(b, 1.7);
        for (double y : {0.3, 1.0, 5.0}) {
            auto f = [&](double v) {
                double u = std::pow(v, 1.0 / b);
                return law.pdf(u) * std::pow(u, 1.0 - b) / b;
            };
            double I = integrate(f, 0.0, std::pow(y, b));
            CHECK(law.cdf(y) == doctest::Approx(I).epsilon(1e-9));
        }
    }
}

TEST_CASE("overshoot scaling: delta_h / h has the h=1 law") {
    OvershootLaw l1(0.3, 1.0), lh(0.3, 4.0);
    for (double y : {0.2, 1.0, 3.0}) CHECK(lh.cdf(4.0 * y) == doctest::Approx(l1.cdf(y)).epsilon(1e-13));
    // single-uniform sampler preserves the coupling exactly
    Rng a(7, 0), b(7, 0);
    CHECK(lh.sample(a) == doctest::Approx(4.0 * l1.sample(b)).epsilon(1e-12));
}

TEST_CASE("overshoot quantile inverts cdf") {
    OvershootLaw law(0.7, 2.0);
    for (double p : {0.01, 0.2, 0.5, 0.8, 0.99})
        CHECK(law.cdf(law.quantile(p)) == doctest::Approx(p).epsilon(1e-11));
}

TEST_CASE("overshoot sampler KS") {
    OvershootLaw law(0.6, 1.0);
    Rng rng(11, 3);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = law.sample(rng);
    CHECK(ks_statistic(xs, [&](double u) { return law.cdf(u); }) < 0.015);
}

TEST_CASE("rng streams are deterministic and distinct") {
    Rng a(123, 5), b(123, 5), c(123, 6);
    CHECK(a.raw() == b.raw());
    CHECK(a.raw() != c.raw());
    Rng u(9, 0);
    for (int i = 0; i < 1000; ++i) {
        double x = u.uniform();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("rng gamma moments") {
    Rng rng(77, 0);
    double shape = 2.5, s = 0.0, s2 = 0.0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        double g = rng.gamma(shape);
        s += g;
        s2 += g * g;
    }
    s /= n;
    s2 = s2 / n - s * s;
    CHECK(s == doctest::Approx(shape).epsilon(0.03));
    CHECK(s2 == doctest::Approx(shape).epsilon(0.08));
}

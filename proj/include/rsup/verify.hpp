#ifndef RSUP_VERIFY_HPP
#define RSUP_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rsup/dist.hpp"
#include "rsup/interval.hpp"
#include "rsup/range.hpp"
#include "rsup/rng.hpp"

namespace rsup {

// adaptive Gauss-Kronrod, abs tolerance 1e-9
inline double integrate(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, 15, 1e-11);
}

// kappa_beta-mass of {F : F hits (b,c)} for the shifted-range family:
//   int_0^b beta x^(beta-1) P(delta_(b-x) < c-b) dx + (c^beta - b^beta),
// evaluated with the substitution x = v^(1/beta) that removes the
// endpoint singularity.
inline double kappa_hit_mass(double beta, double b, double c) {
    if (!(0.0 < b && b < c)) throw std::invalid_argument("kappa_hit_mass: 0 < b < c");
    auto integrand = [&](double v) {
        double x = std::pow(v, 1.0 / beta);
        if (x >= b) return 1.0;
        return OvershootLaw(beta, b - x).cdf(c - b);
    };
    return integrate(integrand, 0.0, std::pow(b, beta)) +
           (std::pow(c, beta) - std::pow(b, beta));
}

// |LHS - RHS| of the shift-invariance identity for a single interval
// (b,c) translated by r.
inline double shift_identity_residual(double beta, double b, double c, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("shift_identity_residual: r > 0");
    return std::abs(kappa_hit_mass(beta, b, c) -
                    kappa_hit_mass(beta, b + r, c + r));
}

// Joint hitting specification for the limit law: intervals (t_i, t_i')
// with levels lambda_i.
struct JointHitSpec {
    double beta;
    IntervalUnion intervals;
    std::vector<double> lambdas;

    JointHitSpec(double beta_, IntervalUnion ivs, std::vector<double> ls)
        : beta(beta_), intervals(std::move(ivs)), lambdas(std::move(ls)) {
        if (intervals.size() != lambdas.size())
            throw std::invalid_argument("JointHitSpec: one lambda per interval");
        for (double l : lambdas)
            if (!(l > 0.0)) throw std::invalid_argument("JointHitSpec: lambdas > 0");
    }
};

// P(Y*_i <= lambda_i for all i) = exp{-E' int max_i lambda_i^-alpha
// 1((R_beta+x) hits (t_i,t_i')) beta x^(beta-1) dx}. Single intervals are
// fully closed form; m >= 2 uses outer quadrature in the substituted
// variable with an inner Monte Carlo over probe walks, common random
// numbers across nodes.
inline double joint_cdf_oracle(const JointHitSpec& spec, double alpha,
                               std::size_t mc_replicates, Rng& rng) {
    const double beta = spec.beta;
    const std::size_t m = spec.intervals.size();
    if (m == 0) return 1.0;

    if (m == 1) {
        auto [a, b] = spec.intervals[0];
        double mass = (a == 0.0) ? std::pow(b, beta) : kappa_hit_mass(beta, a, b);
        return std::exp(-std::pow(spec.lambdas[0], -alpha) * mass);
    }

    std::vector<double> weights(m);
    for (std::size_t i = 0; i < m; ++i)
        weights[i] = std::pow(spec.lambdas[i], -alpha);

    const std::uint64_t crn_base = rng.raw();
    auto mean_value = [&](double x) {
        double acc = 0.0;
        for (std::size_t rep = 0; rep < mc_replicates; ++rep) {
            Rng r(crn_base, rep); // common random numbers across nodes
            auto hits = probe_hits(beta, x, spec.intervals, r);
            double v = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (hits[i]) v = std::max(v, weights[i]);
            acc += v;
        }
        return acc / static_cast<double>(mc_replicates);
    };

    // exponent = int_0^(t_m') beta x^(beta-1) E[...] dx, substituted; the
    // mean is only piecewise smooth in x (kinks at interval endpoints), so
    // integrate each smooth segment separately
    std::vector<double> cuts = {0.0};
    for (const auto& [a, b] : spec.intervals.intervals()) {
        if (a > 0.0) cuts.push_back(std::pow(a, beta));
        cuts.push_back(std::pow(b, beta));
    }
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double v) { return mean_value(std::pow(v, 1.0 / beta)); };
    double exponent = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        exponent += boost::math::quadrature::gauss<double, 64>::integrate(
            integrand, cuts[i], cuts[i + 1]);
    return std::exp(-exponent);
}

// Joint cdf of the alpha-Frechet extremal process with scale sigma at
// increasing times: -ln P = sigma^alpha sum (t_i - t_{i-1}) (min_{j>=i}
// lambda_j)^-alpha.
inline double extremal_fdd(double alpha, double sigma,
                           const std::vector<double>& times,
                           const std::vector<double>& lambdas) {
    if (times.size() != lambdas.size())
        throw std::invalid_argument("extremal_fdd: one lambda per time");
    double expnt = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= prev)) throw std::invalid_argument("extremal_fdd: times increasing");
        double lam_min = *std::min_element(lambdas.begin() + i, lambdas.end());
        expnt += (times[i] - prev) * std::pow(lam_min, -alpha);
        prev = times[i];
    }
    return std::exp(-std::pow(sigma, alpha) * expnt);
}

// Z_{alpha,beta} oracle: the extremal process evaluated at times t^beta.
inline double z_joint_cdf_oracle(double alpha, double beta,
                                 const std::vector<double>& times,
                                 const std::vector<double>& lambdas) {
    std::vector<double> tb(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) tb[i] = std::pow(times[i], beta);
    return extremal_fdd(alpha, 1.0, tb, lambdas);
}

// two-sided Kolmogorov-Smirnov distance of samples against a cdf
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: samples nonempty");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

// two-sample KS distance
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    return d;
}

// order-statistic confidence interval for the p-quantile at z standard
// errors (binomial normal approximation)
struct QuantileCI {
    double lo, hi;
};

inline QuantileCI quantile_ci(const std::vector<double>& sorted, double p, double z) {
    const double n = static_cast<double>(sorted.size());
    double center = n * p;
    double half = z * std::sqrt(n * p * (1.0 - p));
    auto clamp = [&](double k) {
        return sorted[static_cast<std::size_t>(
            std::clamp(k, 0.0, n - 1.0))];
    };
    return {clamp(std::floor(center - half)), clamp(std::ceil(center + half))};
}

} // namespace rsup

#endif

#ifndef RSUP_DIST_HPP
#define RSUP_DIST_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rsup/rng.hpp"

namespace rsup {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Frechet law F(x) = exp(-sigma^alpha x^-alpha) on (0,infty).
class FrechetLaw {
public:
    FrechetLaw(double alpha, double sigma) : alpha_(alpha), sigma_(sigma) {
        if (!(alpha > 0.0) || !(sigma > 0.0))
            throw std::invalid_argument("FrechetLaw: alpha and sigma must be > 0");
    }

    double alpha() const { return alpha_; }
    double sigma() const { return sigma_; }

    double cdf(double x) const {
        if (x <= 0.0) return 0.0;
        return std::exp(-std::pow(sigma_ / x, alpha_));
    }

    // sigma * (-ln p)^(-1/alpha)
    double quantile(double p) const {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("FrechetLaw::quantile: p in (0,1)");
        return sigma_ * std::pow(-std::log(p), -1.0 / alpha_);
    }

    double sample(Rng& rng) const { return quantile(rng.uniform()); }

private:
    double alpha_;
    double sigma_;
};

// Tail constant C_alpha = (int_0^inf x^-alpha sin x dx)^-1
//   = (1-alpha) / (Gamma(2-alpha) cos(pi alpha/2))  for alpha != 1,
//   = 2/pi                                          for alpha = 1.
// The singularity at alpha = 1 is removable; we use the exact limit value
// on a small neighborhood.
inline double tail_constant(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("tail_constant: alpha must be in (0,2)");
    if (std::abs(alpha - 1.0) < 1e-6) return 2.0 / pi;
    return (1.0 - alpha) /
           (boost::math::tgamma(2.0 - alpha) * std::cos(pi * alpha / 2.0));
}

// Overshoot of level h by the (1-beta)-stable subordinator:
//   f_h(y) = sin(pi(1-beta))/pi * h^(1-beta) (y+h)^-1 y^(beta-1),  y > 0,
// with the scaling delta_h =d h * delta_1.
//
// Writing X = delta_1/(1+delta_1) turns the h=1 density into
// Beta(beta, 1-beta), so cdf and quantile reduce to the regularized
// incomplete beta function and its inverse.
class OvershootLaw {
public:
    OvershootLaw(double beta, double h) : beta_(beta), h_(h) {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("OvershootLaw: beta must be in (0,1)");
        if (!(h >= 0.0))
            throw std::invalid_argument("OvershootLaw: h must be >= 0");
    }

    double beta() const { return beta_; }
    double level() const { return h_; }

    double pdf(double y) const {
        if (!(y > 0.0)) throw std::domain_error("OvershootLaw::pdf: y must be > 0");
        if (!(h_ > 0.0)) throw std::domain_error("OvershootLaw::pdf: h must be > 0");
        return std::sin(pi * (1.0 - beta_)) / pi * std::pow(h_, 1.0 - beta_) /
               (y + h_) * std::pow(y, beta_ - 1.0);
    }

    // P(delta_h <= u), computed as the h=1 cdf at u/h
    double cdf(double u) const {
        if (u <= 0.0) return 0.0;
        double v = (h_ > 0.0) ? u / h_ : std::numeric_limits<double>::infinity();
        if (!std::isfinite(v)) return 1.0;
        return boost::math::ibeta(beta_, 1.0 - beta_, v / (1.0 + v));
    }

    // inverse of the h=1 cdf, scaled by h
    double quantile(double p) const {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("OvershootLaw::quantile: p in (0,1)");
        double x = boost::math::ibeta_inv(beta_, 1.0 - beta_, p);
        return h_ * x / (1.0 - x);
    }

    // inverse-cdf sampler; draws for different h are coupled through the
    // shared uniform
    double sample(Rng& rng) const { return quantile(rng.uniform()); }

private:
    double beta_;
    double h_;
};

} // namespace rsup

#endif

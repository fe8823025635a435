#ifndef RSUP_RANGE_HPP
#define RSUP_RANGE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "rsup/dist.hpp"
#include "rsup/interval.hpp"
#include "rsup/rng.hpp"

namespace rsup {

// Lazy hitting engine for the shifted range R_beta + x of the
// (1-beta)-stable subordinator. The walk regenerates at passage times:
// the last known range point p, together with the overshoot law at the
// next level, determines the joint hitting pattern exactly.
class RangeProbe {
public:
    RangeProbe(double beta, double shift) : beta_(beta), point_(shift) {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("RangeProbe: beta in (0,1)");
        if (!(shift >= 0.0))
            throw std::invalid_argument("RangeProbe: shift >= 0");
    }

    double beta() const { return beta_; }
    double current_point() const { return point_; }

    // Hitting indicator of one open interval (a,b), with a >= all
    // previously queried right endpoints. Consumes at most one overshoot.
    bool hits(double a, double b, Rng& rng) {
        if (point_ > a && point_ < b) return true;
        if (point_ >= b) return false;
        // point_ <= a: the next range point above a is a + delta_(a-point_).
        // Boundary point_ == a: range points accumulate to the right of
        // every range point, so (a,b) is hit with probability 1.
        double h = a - point_;
        if (h == 0.0) return true;
        double delta = OvershootLaw(beta_, h).sample(rng);
        point_ = a + delta;
        return point_ < b;
    }

private:
    double beta_;
    double point_; // nondecreasing across queries
};

// Exact joint sample of the hitting indicators of (R_beta + x) for the
// intervals of q, one pass left to right.
inline std::vector<bool> probe_hits(double beta, double x, const IntervalUnion& q,
                                    Rng& rng) {
    RangeProbe probe(beta, x);
    std::vector<bool> out;
    out.reserve(q.size());
    for (const auto& [a, b] : q.intervals()) out.push_back(probe.hits(a, b, rng));
    return out;
}

// P((R_beta + x) hits (a,b)) in closed form via the overshoot cdf.
inline double hit_prob_closed_form(double beta, double x, double a, double b) {
    if (!(a >= 0.0 && a < b))
        throw std::invalid_argument("hit_prob_closed_form: need 0 <= a < b");
    if (!(x >= 0.0)) throw std::invalid_argument("hit_prob_closed_form: x >= 0");
    if (x >= b) return 0.0;
    if (x > a || x == a) return 1.0; // x = a: range accumulates to the right
    return OvershootLaw(beta, a - x).cdf(b - a);
}

// Truncated-jump realization of the subordinator range on [0, horizon]:
// jumps of size >= eps are kept, smaller ones are replaced by their
// expected drift. The range is the complement of the open jump intervals.
class RangePath {
public:
    struct Jump {
        double location; // spatial position where the gap starts
        double size;     // gap length, >= eps
    };

    RangePath(double beta, double horizon, double eps, std::vector<Jump> jumps)
        : beta_(beta), horizon_(horizon), eps_(eps), jumps_(std::move(jumps)) {
        drift_rate_ = (1.0 - beta) / boost::math::tgamma(beta) *
                      std::pow(eps, beta) / beta;
    }

    double beta() const { return beta_; }
    double horizon() const { return horizon_; }
    double eps() const { return eps_; }
    double drift_rate() const { return drift_rate_; }
    const std::vector<Jump>& jumps() const { return jumps_; }

    // last point of the simulated range
    double last_point() const {
        return jumps_.empty() ? horizon_ : jumps_.back().location + jumps_.back().size;
    }

    // whether (range + x) intersects the open interval (a,b)
    bool hits(double x, double a, double b) const {
        if (b <= x) return false;
        double lo = std::max(a - x, 0.0), hi = b - x;
        if (lo >= last_point()) return false;
        if (lo < 0.0) return true; // 0 is in the range
        // miss iff some gap [g0,g1] covers (lo,hi)
        for (const auto& j : jumps_) {
            if (j.location > lo) break;
            if (j.location + j.size >= hi) return false;
        }
        return true;
    }

private:
    double beta_;
    double horizon_;
    double eps_;
    double drift_rate_;
    std::vector<Jump> jumps_;
};

// Simulate the jumps of the standard (1-beta)-stable subordinator with
// Levy measure nu(ds) = ((1-beta)/Gamma(beta)) s^-(2-beta) ds. Retained
// jumps (size >= eps) arrive at operational rate
// nu([eps,inf)) = eps^-(1-beta)/Gamma(beta), with Pareto sizes; small
// jumps contribute drift ((1-beta)/Gamma(beta)) eps^beta/beta per unit
// operational time. Generation continues until a jump starts at or
// beyond the horizon, so the range is fully resolved on [0, horizon].
inline RangePath sample_path(double beta, double horizon, double eps, Rng& rng) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("sample_path: beta in (0,1)");
    if (!(eps > 0.0) || !(horizon > 0.0))
        throw std::domain_error("sample_path: eps and horizon must be > 0");

    const double g = boost::math::tgamma(beta);
    const double rate = std::pow(eps, beta - 1.0) / g;
    const double drift = (1.0 - beta) / g * std::pow(eps, beta) / beta;
    const double tail_exp = -1.0 / (1.0 - beta);

    std::vector<RangePath::Jump> jumps;
    double pos = 0.0;
    for (;;) {
        double dt = rng.exponential() / rate;
        pos += drift * dt;
        double size = eps * std::pow(rng.uniform(), tail_exp);
        jumps.push_back({pos, size});
        if (pos >= horizon) break;
        pos += size;
    }
    return RangePath(beta, horizon, eps, std::move(jumps));
}

// j_{s,t} of F = range(path) + x: the longest gap (a,b) of F with
// s < a < t; j_{s,s} = 0 by convention.
inline double longest_gap(const RangePath& path, double s, double t, double x) {
    if (!(0.0 <= s && s <= t))
        throw std::invalid_argument("longest_gap: need 0 <= s <= t");
    if (s == t) return 0.0;
    double best = 0.0;
    for (const auto& j : path.jumps()) {
        double a = j.location + x;
        if (a >= t) break;
        if (a > s && j.size > best) best = j.size;
    }
    return best;
}

} // namespace rsup

#endif

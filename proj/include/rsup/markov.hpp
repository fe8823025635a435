#ifndef RSUP_MARKOV_HPP
#define RSUP_MARKOV_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "rsup/interval.hpp"
#include "rsup/rng.hpp"

namespace rsup {
namespace detail {

// Sum_{m>=M} m^-s for s > 1, Euler-Maclaurin beyond a direct head.
inline double zeta_tail(double s, std::uint64_t M) {
    if (M == 0) throw std::invalid_argument("zeta_tail: M >= 1");
    double head = 0.0;
    std::uint64_t m = M;
    for (; m < 30; ++m) head += std::pow(static_cast<double>(m), -s);
    // Hurwitz zeta asymptotic at q = m
    double x = static_cast<double>(m);
    return head + std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) +
           s / 12.0 * std::pow(x, -s - 1.0) -
           s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(x, -s - 3.0) +
           s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 *
               std::pow(x, -s - 5.0);
}

// Sum_{m=1}^{M} m^-a for 0 < a < 1 (asymptotic with zeta continuation).
inline double partial_pow_sum(double a, std::uint64_t M) {
    if (M < 30) {
        double s = 0.0;
        for (std::uint64_t m = 1; m <= M; ++m)
            s += std::pow(static_cast<double>(m), -a);
        return s;
    }
    // zeta(a) - zeta(a, M+1) with the Hurwitz asymptotic at q = M+1
    double q = static_cast<double>(M + 1);
    return boost::math::zeta(a) + std::pow(q, 1.0 - a) / (1.0 - a) -
           0.5 * std::pow(q, -a) - a / 12.0 * std::pow(q, -a - 1.0) +
           a * (a + 1.0) * (a + 2.0) / 720.0 * std::pow(q, -a - 3.0) -
           a * (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) / 30240.0 *
               std::pow(q, -a - 5.0);
}

} // namespace detail

// Path of the descent chain: from state i >= 1 the next state is i-1;
// from 0 a fresh jump is drawn from the row p_{0,.}.
struct ChainPath {
    std::vector<std::uint64_t> states; // length n+1

    // steps k in 1..n with state 0
    std::vector<std::uint64_t> visits() const {
        std::vector<std::uint64_t> out;
        for (std::size_t k = 1; k < states.size(); ++k)
            if (states[k] == 0) out.push_back(k);
        return out;
    }
};

// Null-recurrent chain on {0,1,2,...} with p_{i,i-1} = 1 for i >= 1 and
// the Zipf-like row p_{0,j} = (j+1)^-(2-beta) / zeta(2-beta), whose return
// tail is regularly varying with exponent beta-1. Tail sums have closed
// form through zeta tails, so pi, w_n and b_n are exact at any n.
class ChainModel {
public:
    explicit ChainModel(double beta) : beta_(beta), s_(2.0 - beta) {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("ChainModel: beta in (0,1)");
        zeta_s_ = boost::math::zeta(s_);
    }

    double beta() const { return beta_; }

    // p_{0,j}
    double p0(std::uint64_t j) const {
        return std::pow(static_cast<double>(j + 1), -s_) / zeta_s_;
    }

    // Sum_{j>=k} p_{0,j}; p0_tail(0) = 1
    double p0_tail(std::uint64_t k) const {
        if (k == 0) return 1.0;
        return detail::zeta_tail(s_, k + 1) / zeta_s_;
    }

    // invariant measure: pi_0 = 1, pi_i = Sum_{j>=i} p_{0,j}
    double invariant_measure(std::uint64_t i) const {
        return i == 0 ? 1.0 : p0_tail(i);
    }

    // P_0(phi_A >= k) = Sum_{j>=k-1} p_{0,j}  (phi = J+1)
    double return_tail(std::uint64_t k) const {
        if (k < 1) throw std::invalid_argument("return_tail: k >= 1");
        return p0_tail(k - 1);
    }

    // Sum_{i=1}^{n} pi_i = E[min(J,n)], in closed form
    double pi_partial_sum(std::uint64_t n) const {
        // Sum_{j=0}^{n-1} j p_{0,j} + n * tail(n)
        double head = (detail::partial_pow_sum(s_ - 1.0, n) -
                       (zeta_s_ - detail::zeta_tail(s_, n + 1))) /
                      zeta_s_;
        return head + static_cast<double>(n) * p0_tail(n);
    }

    // w_n = mu(paths visiting 0 by time n) = 1 + Sum_{i=1}^{n} pi_i
    double wandering_rate(std::uint64_t n) const {
        if (n < 1) throw std::invalid_argument("wandering_rate: n >= 1");
        return 1.0 + pi_partial_sum(n);
    }

    // b_n^alpha = Sum_{i=1}^{n} pi_i + P_0(phi <= n) = w_n - tail(n)
    double bn_alpha(std::uint64_t n) const {
        if (n < 1) throw std::invalid_argument("bn: n >= 1");
        return pi_partial_sum(n) + (1.0 - p0_tail(n));
    }

    double bn(std::uint64_t n, double alpha) const {
        return std::pow(bn_alpha(n), 1.0 / alpha);
    }

    // smallest j with P(J <= j) >= u, via the monotone tail
    std::uint64_t invert_jump_cdf(double u) const {
        double target = 1.0 - u; // smallest j with p0_tail(j+1) <= target
        if (p0_tail(1) <= target) return 0;
        std::uint64_t lo = 0, hi = 1;
        while (p0_tail(hi + 1) > target) {
            lo = hi;
            hi *= 2;
            if (hi > (1ULL << 60)) break;
        }
        while (hi - lo > 1) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            if (p0_tail(mid + 1) > target)
                lo = mid;
            else
                hi = mid;
        }
        return hi;
    }

    std::uint64_t sample_jump(Rng& rng) const {
        return invert_jump_cdf(rng.uniform());
    }

    // J ~ p_{0,.} conditioned on J <= max_j
    std::uint64_t sample_jump_truncated(std::uint64_t max_j, Rng& rng) const {
        double cdf_max = 1.0 - p0_tail(max_j + 1);
        return invert_jump_cdf(rng.uniform() * cdf_max);
    }

private:
    double beta_;
    double s_;
    double zeta_s_;
};

// Sampler for eta_n: start-state weights pi_i (i = 1..n) plus the atom
// P_0(phi <= n) at 0 with a conditioned first jump, then renewal
// evolution. Tables are built once so repeated draws are cheap.
class EtaSampler {
public:
    EtaSampler(const ChainModel& model, std::uint64_t n) : model_(model), n_(n) {
        if (n < 1) throw std::invalid_argument("EtaSampler: n >= 1");
        cum_.resize(n + 1);
        cum_[0] = 1.0 - model.p0_tail(n); // atom: start at 0, return by n
        double tail = 1.0;                // p0_tail(i) by recurrence
        for (std::uint64_t i = 1; i <= n; ++i) {
            tail -= model.p0(i - 1);
            cum_[i] = cum_[i - 1] + std::max(tail, 0.0);
        }
        total_ = cum_[n]; // = b_n^alpha
        std::uint64_t cap =
            std::min<std::uint64_t>(std::max<std::uint64_t>(4 * n, 1024), 1 << 16);
        jump_cdf_.resize(cap);
        double c = 0.0;
        for (std::uint64_t j = 0; j < cap; ++j) {
            c += model.p0(j);
            jump_cdf_[j] = c;
        }
    }

    double bn_alpha() const { return total_; }
    std::uint64_t n() const { return n_; }
    const ChainModel& model() const { return model_; }

    // start state: 0 with the atom weight, else i in 1..n with weight pi_i
    std::uint64_t sample_start(Rng& rng) const {
        double u = rng.uniform() * total_;
        if (u < cum_[0]) return 0;
        auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
        return static_cast<std::uint64_t>(it - cum_.begin());
    }

    // steps k in 1..n at which the path visits 0 (nonempty by construction)
    void sample_visits(Rng& rng, std::vector<std::uint64_t>& out) const {
        out.clear();
        std::uint64_t start = sample_start(rng);
        std::uint64_t k =
            (start == 0) ? model_.sample_jump_truncated(n_ - 1, rng) + 1 : start;
        while (k <= n_) {
            out.push_back(k);
            k += sample_jump(rng) + 1;
        }
    }

    std::vector<std::uint64_t> sample_visits(Rng& rng) const {
        std::vector<std::uint64_t> out;
        sample_visits(rng, out);
        return out;
    }

    // full state path of length n+1
    ChainPath sample_path(Rng& rng) const {
        ChainPath path;
        path.states.resize(n_ + 1);
        std::uint64_t state = sample_start(rng);
        path.states[0] = state;
        bool first_from_zero = (state == 0);
        for (std::uint64_t step = 1; step <= n_; ++step) {
            if (state == 0) {
                state = first_from_zero ? model_.sample_jump_truncated(n_ - 1, rng)
                                        : sample_jump(rng);
                first_from_zero = false;
            } else {
                --state;
            }
            path.states[step] = state;
        }
        return path;
    }

    // table-accelerated J ~ p_{0,.}
    std::uint64_t sample_jump(Rng& rng) const {
        double u = rng.uniform();
        if (u < jump_cdf_.back()) {
            auto it = std::upper_bound(jump_cdf_.begin(), jump_cdf_.end(), u);
            return static_cast<std::uint64_t>(it - jump_cdf_.begin());
        }
        return model_.invert_jump_cdf(u);
    }

private:
    const ChainModel& model_;
    std::uint64_t n_;
    double total_;
    std::vector<double> cum_;
    std::vector<double> jump_cdf_;
};

// Renewal partial-sum walk S_n = Y_1 + ... + Y_n with Y = J + 1 and J from
// the chain's jump row at beta := gamma, so P(Y > y) is regularly varying
// with exponent gamma - 1. Reports, per interval of q, whether S_n/theta
// enters it for some n >= 0.
inline std::vector<bool> renewal_range_hits(double gamma, double theta,
                                            const IntervalUnion& q, Rng& rng) {
    if (!(theta > 0.0)) throw std::invalid_argument("renewal_range_hits: theta > 0");
    ChainModel model(gamma);
    EtaSampler sampler(model, 1); // reuse its fast jump table
    std::vector<bool> hit(q.size(), false);
    double limit = q.sup() * theta;
    double S = 0.0;
    while (S <= limit) {
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!hit[i] && q[i].first * theta < S && S < q[i].second * theta)
                hit[i] = true;
        }
        S += static_cast<double>(sampler.sample_jump(rng) + 1);
    }
    return hit;
}

} // namespace rsup

#endif

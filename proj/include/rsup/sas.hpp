#ifndef RSUP_SAS_HPP
#define RSUP_SAS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rsup/dist.hpp"
#include "rsup/interval.hpp"
#include "rsup/markov.hpp"
#include "rsup/rng.hpp"

namespace rsup {

// Series truncation depth: the L2 tail bound
// E(sum_{j>J} Gamma_j^(-1/alpha))^2 <= J^(1-2/alpha) * alpha/(2-alpha)
// is pushed below tol^2, capped so desk-scale runs stay tractable.
inline std::uint64_t truncation_depth(double alpha, double tol,
                                      std::uint64_t cap = 100000) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("truncation_depth: alpha in (0,2)");
    if (!(tol > 0.0)) throw std::invalid_argument("truncation_depth: tol > 0");
    double j = std::pow(tol * tol * (2.0 - alpha) / alpha, alpha / (alpha - 2.0));
    if (!(j < static_cast<double>(cap))) return cap;
    return std::max<std::uint64_t>(16, static_cast<std::uint64_t>(std::ceil(j)));
}

struct SeriesConfig {
    const ChainModel* model;
    double alpha;
    std::uint64_t n; // horizon
    std::uint64_t J; // series truncation depth

    SeriesConfig(const ChainModel& m, double alpha_, std::uint64_t n_,
                 std::uint64_t J_ = 0, double tol = 0.02)
        : model(&m), alpha(alpha_), n(n_), J(J_) {
        if (!(alpha > 0.0 && alpha < 2.0))
            throw std::domain_error("SeriesConfig: alpha in (0,2)");
        if (n < 1) throw std::domain_error("SeriesConfig: n >= 1");
        if (J == 0) J = truncation_depth(alpha, tol);
    }
};

// X_k = b_n C_alpha^(1/alpha) sum_{j<=J} eps_j Gamma_j^(-1/alpha)
//       1{path_j visits 0 at step k},  paths ~ eta_n.
// Under eta_n the series denominator max_k f.T^k equals 1 a.s., so only
// the visit indicators remain. Terms are never reordered.
inline std::vector<double> simulate_sas(const SeriesConfig& cfg,
                                        const EtaSampler& sampler, Rng& rng) {
    if (sampler.n() != cfg.n)
        throw std::invalid_argument("simulate_sas: sampler horizon mismatch");
    std::vector<double> x(cfg.n, 0.0);
    std::vector<std::uint64_t> visits;
    double gamma = 0.0;
    for (std::uint64_t j = 0; j < cfg.J; ++j) {
        gamma += rng.exponential();
        double w = std::pow(gamma, -1.0 / cfg.alpha);
        double eps = (rng.uniform() < 0.5) ? -1.0 : 1.0;
        sampler.sample_visits(rng, visits);
        for (std::uint64_t k : visits) x[k - 1] += eps * w;
    }
    double pref = cfg.model->bn(cfg.n, cfg.alpha) *
                  std::pow(tail_constant(cfg.alpha), 1.0 / cfg.alpha);
    for (double& v : x) v *= pref;
    return x;
}

inline std::vector<double> simulate_sas(const SeriesConfig& cfg, Rng& rng) {
    EtaSampler sampler(*cfg.model, cfg.n);
    return simulate_sas(cfg, sampler, rng);
}

// M_n(|X|)(B) = max over k with k/n in B of |X_k|; 0 if none.
inline double partial_max_measure(const std::vector<double>& values,
                                  std::uint64_t n, const IntervalUnion& b) {
    double m = 0.0;
    for (std::uint64_t k = 1; k <= n && k <= values.size(); ++k)
        if (b.contains(static_cast<double>(k) / static_cast<double>(n)))
            m = std::max(m, std::abs(values[k - 1]));
    return m;
}

// m_n(B; path) = 1 iff the path visits 0 at some step k with k/n in B
inline int path_sup_measure(const std::vector<std::uint64_t>& visits,
                            std::uint64_t n, const IntervalUnion& b) {
    for (std::uint64_t k : visits)
        if (b.contains(static_cast<double>(k) / static_cast<double>(n))) return 1;
    return 0;
}

inline int path_sup_measure(const ChainPath& path, std::uint64_t n,
                            const IntervalUnion& b) {
    return path_sup_measure(path.visits(), n, b);
}

// One sample of b_n^-1 Y^(n): V_i = max_j Gamma_j^(-1/alpha) m_n((t_i,t_i');
// path_j). Coefficients are 0/1, so the first path hitting a coordinate
// fixes it; stopping is exact once every coordinate is fixed.
inline std::vector<double> simulate_Yn(const EtaSampler& sampler, double alpha,
                                       const std::vector<std::pair<double, double>>& intervals,
                                       Rng& rng, double u_min = 1e-9,
                                       std::size_t min_terms = 0) {
    const std::uint64_t n = sampler.n();
    std::vector<double> v(intervals.size(), 0.0);
    std::size_t unresolved = intervals.size();
    std::vector<std::uint64_t> visits;
    double gamma = 0.0;
    std::size_t terms = 0;
    while (unresolved > 0 || terms < min_terms) {
        gamma += rng.exponential();
        double w = std::pow(gamma, -1.0 / alpha);
        if (w < u_min && terms >= min_terms) break;
        sampler.sample_visits(rng, visits);
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            if (v[i] > 0.0) continue;
            for (std::uint64_t k : visits) {
                double t = static_cast<double>(k) / static_cast<double>(n);
                if (intervals[i].first < t && t < intervals[i].second) {
                    v[i] = w;
                    --unresolved;
                    break;
                }
            }
        }
        ++terms;
    }
    return v;
}

} // namespace rsup

#endif

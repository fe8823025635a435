#ifndef RSUP_SUPMEASURE_HPP
#define RSUP_SUPMEASURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rsup/interval.hpp"
#include "rsup/range.hpp"
#include "rsup/rng.hpp"

namespace rsup {

// Piecewise-constant upper-semicontinuous sup measure on a grid: value
// v_i on the open cell (g_i, g_{i+1}), the u.s.c. representative taking
// max(v_{i-1}, v_i) at interior grid points and 0 outside the grid.
class GridSupMeasure {
public:
    GridSupMeasure(std::vector<double> grid, std::vector<double> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (grid_.size() < 2 || values_.size() + 1 != grid_.size())
            throw std::invalid_argument("GridSupMeasure: need K+1 grid points, K values");
        for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
            if (!(grid_[i] < grid_[i + 1]))
                throw std::invalid_argument("GridSupMeasure: grid must be increasing");
            if (!(values_[i] >= 0.0))
                throw std::invalid_argument("GridSupMeasure: values must be >= 0");
        }
    }

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    // m(G) = sup of the cell values over cells whose interior meets G
    double measure(const IntervalUnion& g) const {
        double m = 0.0;
        for (const auto& [a, b] : g.intervals()) {
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (grid_[i] < b && a < grid_[i + 1]) m = std::max(m, values_[i]);
            }
        }
        return m;
    }

    // d-check m(t) = inf over open G containing t of m(G)
    double sup_derivative(double t) const {
        double m = 0.0;
        bool inside = false;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (grid_[i] < t && t < grid_[i + 1]) return values_[i];
            if (t == grid_[i] || t == grid_[i + 1]) {
                m = std::max(m, values_[i]);
                inside = true;
            }
        }
        return inside ? m : 0.0;
    }

    // i-check of the u.s.c. representative over G; equals measure(G)
    double sup_integral(const IntervalUnion& g) const { return measure(g); }

private:
    std::vector<double> grid_;
    std::vector<double> values_;
};

// One generated point of the Poisson representation of W_{alpha,beta}:
// weight U_j = (Gamma_j / T^beta)^(-1/alpha), location V_j with density
// beta y^(beta-1) / T^beta on (0,T].
struct PoissonPoint {
    double gamma;  // unit-rate arrival
    double weight; // U_j, strictly decreasing in j
    double loc;    // V_j
};

struct SimulateOptions {
    double u_min = 1e-9;        // weight floor for the zero-hit fallback
    std::size_t min_points = 0; // force at least this many points (tests)
};

namespace detail {

// refinement of all query intervals into sorted disjoint elementary
// intervals, with per-query membership lists
struct Atomized {
    IntervalUnion elementary;
    std::vector<std::vector<std::size_t>> members; // per query
};

inline Atomized atomize(const std::vector<IntervalUnion>& queries) {
    std::vector<double> pts;
    for (const auto& q : queries)
        for (const auto& [a, b] : q.intervals()) {
            pts.push_back(a);
            pts.push_back(b);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<std::pair<double, double>> cells;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        bool covered = false;
        double mid = 0.5 * (pts[i] + pts[i + 1]);
        for (const auto& q : queries)
            if (q.contains(mid)) {
                covered = true;
                break;
            }
        if (covered) cells.emplace_back(pts[i], pts[i + 1]);
    }

    Atomized out;
    out.elementary = IntervalUnion(cells);
    out.members.resize(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi)
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            double mid = 0.5 * (cells[ci].first + cells[ci].second);
            if (queries[qi].contains(mid)) out.members[qi].push_back(ci);
        }
    return out;
}

} // namespace detail

// One joint sample of (W_{alpha,beta}(A_1), ..., W_{alpha,beta}(A_m)) for
// queries inside (0,T], by the Poisson representation with points in
// decreasing weight order. A query's value is fixed by the first point
// hitting it; generation stops once every query is resolved (later points
// have smaller weights) or the weight falls below opts.u_min.
inline std::vector<double> simulate_W(double alpha, double beta, double T,
                                      const std::vector<IntervalUnion>& queries,
                                      Rng& rng, const SimulateOptions& opts = {}) {
    if (!(alpha > 0.0)) throw std::invalid_argument("simulate_W: alpha > 0");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("simulate_W: beta in (0,1)");
    if (!(T > 0.0)) throw std::invalid_argument("simulate_W: T > 0");
    for (const auto& q : queries)
        if (q.sup() > T)
            throw std::domain_error("simulate_W: query extends beyond the window T");

    auto atom = detail::atomize(queries);
    std::vector<double> value(queries.size(), 0.0);
    std::size_t unresolved = 0;
    for (const auto& q : queries)
        if (!q.empty()) ++unresolved;

    const double tb = std::pow(T, beta);
    double gamma = 0.0;
    std::size_t points = 0;
    while (unresolved > 0 || points < opts.min_points) {
        gamma += rng.exponential();
        double u = std::pow(gamma / tb, -1.0 / alpha);
        if (u < opts.u_min && points >= opts.min_points) break;
        double v = T * std::pow(rng.uniform(), 1.0 / beta);
        auto hits = probe_hits(beta, v, atom.elementary, rng);
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
            if (value[qi] > 0.0) continue;
            for (std::size_t ci : atom.members[qi]) {
                if (hits[ci]) {
                    value[qi] = u;
                    --unresolved;
                    break;
                }
            }
        }
        ++points;
    }
    return value;
}

// Joint sample of Z_{alpha,beta}(t_i) = W((0,t_i]); nondecreasing in t.
inline std::vector<double> simulate_Z(double alpha, double beta,
                                      const std::vector<double>& ts, Rng& rng,
                                      const SimulateOptions& opts = {}) {
    if (ts.empty()) return {};
    std::vector<IntervalUnion> queries;
    queries.reserve(ts.size());
    double tmax = 0.0;
    for (double t : ts) {
        if (!(t > 0.0)) throw std::invalid_argument("simulate_Z: times must be > 0");
        if (!(t >= tmax)) throw std::invalid_argument("simulate_Z: times must be ordered");
        tmax = t;
        queries.push_back(IntervalUnion{{0.0, t}});
    }
    return simulate_W(alpha, beta, tmax, queries, rng, opts);
}

// Parameters of the gap-weighted process Z_{alpha,beta,gamma}; requires
// 0 < gamma < (1-beta)/alpha.
struct GammaProcessParams {
    double alpha;
    double beta;
    double gamma;
    double eps; // jump-retention threshold for the gap paths

    GammaProcessParams(double alpha_, double beta_, double gamma_, double eps_ = 0.0)
        : alpha(alpha_), beta(beta_), gamma(gamma_), eps(eps_) {
        if (!(alpha > 0.0)) throw std::invalid_argument("GammaProcessParams: alpha > 0");
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("GammaProcessParams: beta in (0,1)");
        if (!(gamma > 0.0 && gamma < (1.0 - beta) / alpha))
            throw std::invalid_argument(
                "GammaProcessParams: need 0 < gamma < (1-beta)/alpha");
    }

    double hurst() const { return gamma + beta / alpha; }
};

// Joint sample of Z_{alpha,beta,gamma}(t_i): each Poisson point carries a
// truncated-jump range path; its contribution at time t is
// U * [1((R+V) hits (0,t]) * j_{0,t}(R+V)]^gamma. The indicator and the
// gap refer to the same realized path.
inline std::vector<double> simulate_Z_gamma(const GammaProcessParams& p,
                                            const std::vector<double>& ts, Rng& rng,
                                            const SimulateOptions& opts = {}) {
    if (ts.empty()) return {};
    double tmax = 0.0, tmin = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        if (!(t > 0.0)) throw std::invalid_argument("simulate_Z_gamma: times > 0");
        if (!(t >= tmax)) throw std::invalid_argument("simulate_Z_gamma: times ordered");
        tmax = t;
        tmin = std::min(tmin, t);
    }
    const double eps = (p.eps > 0.0) ? p.eps : 1e-4 * tmin;
    const double tb = std::pow(tmax, p.beta);
    const double cap = std::pow(tmax, p.gamma); // bound on in-window gap weight

    std::vector<double> value(ts.size(), 0.0);
    double gamma_arr = 0.0;
    std::size_t points = 0;
    for (;;) {
        gamma_arr += rng.exponential();
        double u = std::pow(gamma_arr / tb, -1.0 / p.alpha);
        double vmin = *std::min_element(value.begin(), value.end());
        if (vmin > 0.0 && u * cap < vmin && points >= opts.min_points) break;
        if (u < opts.u_min && points >= opts.min_points) break;
        double v = tmax * std::pow(rng.uniform(), 1.0 / p.beta);
        RangePath path = sample_path(p.beta, std::max(tmax - v, eps), eps, rng);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!path.hits(v, 0.0, ts[i])) continue;
            double gap = longest_gap(path, 0.0, ts[i], v);
            double contrib = u * std::pow(gap, p.gamma);
            value[i] = std::max(value[i], contrib);
        }
        ++points;
    }
    return value;
}

// Coupled joint samples of W on (0,t_i], (r,r+t_i], and (0,r+t_i], plus
// W((0,r]), all read off one realization of the point family.
struct MaxIncrementSample {
    double w_0r = 0.0;            // W((0,r])
    std::vector<double> w_0t;     // W((0,t_i])
    std::vector<double> w_shift;  // W((r,r+t_i])
    std::vector<double> w_0rt;    // W((0,r+t_i])
};

inline MaxIncrementSample max_increment_shift_sample(double alpha, double beta,
                                                     double r,
                                                     const std::vector<double>& ts,
                                                     Rng& rng) {
    if (!(r >= 0.0)) throw std::invalid_argument("max_increment_shift_sample: r >= 0");
    double tmax = ts.empty() ? 0.0 : ts.back();
    double T = r + tmax;
    if (!(T > 0.0)) throw std::invalid_argument("max_increment_shift_sample: empty window");

    std::vector<IntervalUnion> queries;
    if (r > 0.0) queries.push_back(IntervalUnion{{0.0, r}});
    for (double t : ts) queries.push_back(IntervalUnion{{0.0, t}});
    for (double t : ts)
        queries.push_back(r > 0.0 ? IntervalUnion{{r, r + t}} : IntervalUnion{{0.0, t}});
    for (double t : ts) queries.push_back(IntervalUnion{{0.0, r + t}});

    auto vals = simulate_W(alpha, beta, T, queries, rng);
    MaxIncrementSample out;
    std::size_t k = 0;
    out.w_0r = (r > 0.0) ? vals[k++] : 0.0;
    out.w_0t.assign(vals.begin() + k, vals.begin() + k + ts.size());
    k += ts.size();
    out.w_shift.assign(vals.begin() + k, vals.begin() + k + ts.size());
    k += ts.size();
    out.w_0rt.assign(vals.begin() + k, vals.begin() + k + ts.size());
    return out;
}

} // namespace rsup

#endif

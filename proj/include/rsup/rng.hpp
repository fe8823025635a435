#ifndef RSUP_RNG_HPP
#define RSUP_RNG_HPP

#include <cstdint>
#include <cmath>
#include <random>

namespace rsup {

// splitmix64 finalizer; used to mix (seed, stream id) into an initial state.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic stream of uniforms keyed by (master seed, stream id).
// Streams with distinct ids are independent for practical purposes, and a
// replicate's stream does not depend on how replicates are scheduled.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix64(mix64(seed) ^ mix64(stream + 0x5851f42d4c957f2dULL))) {}

    // uniform on (0,1), both endpoints excluded
    double uniform() {
        std::uint64_t u = engine_();
        double x = (static_cast<double>(u >> 11) + 0.5) * 0x1.0p-53;
        return x;
    }

    double exponential() { return -std::log(uniform()); }

    // standard gamma via Marsaglia-Tsang, with boost for shape < 1 handled
    // by the alpha-boost trick
    double gamma(double shape) {
        if (shape < 1.0) {
            double u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace rsup

#endif

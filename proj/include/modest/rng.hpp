#ifndef MODEST_RNG_HPP
#define MODEST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "modest/errors.hpp"

namespace modest {

/**
 * Seeded random source with a fixed, documented algorithm.
 *
 * The generator is std::mt19937_64 seeded directly with a 64-bit seed; its
 * output sequence is pinned by the C++ standard, so identical seeds yield
 * identical draws everywhere. All variate transforms below are part of the
 * reproducibility contract and must not be changed silently:
 *
 *   uniform      u = (x >> 11) * 2^-53                  in [0, 1)
 *   normal       Box-Muller, sqrt(-2 ln u1) * cos(2 pi u2), u1 in (0, 1]
 *   exponential  inverse CDF, -ln(u1) / rate
 *   weibull      inverse CDF, scale * (-ln(u1))^(1/shape)
 *   gamma        Marsaglia-Tsang squeeze (shape >= 1);
 *                shape < 1 boosted via gamma(shape+1) * u^(1/shape)
 *   beta         gamma ratio, X / (X + Y)
 *
 * u1 denotes 1 - uniform(), which lies in (0, 1].
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a log argument.
    double uniform_pos() { return 1.0 - uniform(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal draw. Consumes exactly two uniforms.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double exponential(double rate) {
        return -std::log(uniform_pos()) / rate;
    }

    double weibull(double shape, double scale) {
        return scale * std::pow(-std::log(uniform_pos()), 1.0 / shape);
    }

    /// Gamma(shape, scale). Marsaglia-Tsang (2000) for shape >= 1.
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = uniform_pos();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    double beta(double a, double b) {
        const double x = gamma(a, 1.0);
        const double y = gamma(b, 1.0);
        return x / (x + y);
    }

private:
    static constexpr double two_pi = 6.283185307179586476925286766559;
    std::mt19937_64 eng_;
};

} // namespace modest

#endif

#ifndef MODEST_VEC_HPP
#define MODEST_VEC_HPP

#include <cmath>
#include <span>
#include <vector>

namespace modest {

using Vec = std::vector<double>;

inline double norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double norm_inf(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s = std::max(s, std::fabs(v));
    return s;
}

inline bool all_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace modest

#endif

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace hac::detail {

inline constexpr double inf = std::numeric_limits<double>::infinity();
inline constexpr double eps = std::numeric_limits<double>::epsilon();

// Largest representable double below 1.
inline double one_minus_eps() { return std::nextafter(1.0, 0.0); }

// log(exp(a) + exp(b)) without overflow.
inline double logsumexp(double a, double b) {
    if (a == -inf) return b;
    if (b == -inf) return a;
    const double m = std::max(a, b);
    if (m == inf) return inf;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

// log(exp(a) - exp(b)) for a >= b.
inline double logdiffexp(double a, double b) {
    if (b == -inf) return a;
    if (a <= b) return -inf;
    return a + std::log1p(-std::exp(b - a));
}

// log1p(exp(x)): stable for both signs of x.
inline double log1pexp(double x) {
    if (x > 33.0) return x;
    if (x < -37.0) return std::exp(x);
    return std::log1p(std::exp(x));
}

inline double sq(double x) { return x * x; }

}  // namespace hac::detail

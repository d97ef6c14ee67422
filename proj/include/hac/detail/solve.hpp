#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hac::detail {

// Root of a monotone increasing function g on [lo, hi] with g(root) = target.
// Bisection with a secant step per iteration (Illinois-style safeguard);
// stops when |g(x) - target| < f_tol or the bracket collapses.
template <typename G>
double solve_increasing(G&& g, double target, double lo, double hi,
                        double f_tol = 1e-9, int max_iter = 200) {
    double glo = g(lo) - target;
    double ghi = g(hi) - target;
    if (glo >= 0.0) return lo;
    if (ghi <= 0.0) return hi;
    double x = lo;
    for (int it = 0; it < max_iter; ++it) {
        // Secant proposal, safeguarded into the open bracket.
        double xs = (ghi != glo) ? lo - glo * (hi - lo) / (ghi - glo) : 0.5 * (lo + hi);
        const double xb = 0.5 * (lo + hi);
        if (!(xs > lo && xs < hi)) xs = xb;
        // Alternate: odd iterations use bisection to guarantee bracket shrink.
        x = (it % 2 == 0) ? xs : xb;
        const double gx = g(x) - target;
        if (std::fabs(gx) < f_tol) return x;
        if (gx < 0.0) {
            lo = x;
            glo = gx;
        } else {
            hi = x;
            ghi = gx;
        }
        if (hi - lo < 1e-15 * (std::fabs(lo) + 1.0)) break;
    }
    return 0.5 * (lo + hi);
}

// Maximize a scalar function on [lo, hi] by a coarse grid scan followed by
// golden-section refinement in the best bracket. Robust to mild
// multi-modality; x_tol is the absolute tolerance on the argument.
template <typename F>
double maximize_scalar(F&& f, double lo, double hi, double x_tol = 1e-6,
                       int grid = 33) {
    if (!(hi > lo)) return lo;
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i < grid; ++i) {
        const double x = lo + (hi - lo) * i / (grid - 1);
        const double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    const double cell = (hi - lo) / (grid - 1);
    double a = std::max(lo, best_x - cell);
    double b = std::min(hi, best_x + cell);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return (f(xm) >= best_f) ? xm : best_x;
}

}  // namespace hac::detail

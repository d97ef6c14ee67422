#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace hac::detail {

// Adaptive Gauss-Kronrod 15(7) integration on a finite interval.
// Subdivides until the local Kronrod-Gauss discrepancy is below the
// tolerance share of the interval, or the depth limit is reached.
class GaussKronrod {
public:
    template <typename F>
    static double integrate(F&& f, double a, double b, double abs_tol = 1e-10) {
        double total = 0.0;
        struct Seg { double a, b, tol; int depth; };
        std::vector<Seg> stack{{a, b, abs_tol, 0}};
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            auto [value, error] = gk15(f, s.a, s.b);
            if (error <= s.tol || s.depth >= 52 || s.b - s.a < 1e-15 * (std::fabs(s.a) + 1.0)) {
                total += value;
            } else {
                const double m = 0.5 * (s.a + s.b);
                stack.push_back({s.a, m, 0.5 * s.tol, s.depth + 1});
                stack.push_back({m, s.b, 0.5 * s.tol, s.depth + 1});
            }
        }
        return total;
    }

private:
    template <typename F>
    static std::pair<double, double> gk15(F&& f, double a, double b) {
        // Kronrod nodes/weights on [-1,1]; Gauss-7 embedded at odd indices.
        static const double xk[8] = {
            0.991455371120813, 0.949107912342759, 0.864864423359769,
            0.741531185599394, 0.586087235467691, 0.405845151377397,
            0.207784955007898, 0.0};
        static const double wk[8] = {
            0.022935322010529, 0.063092092629979, 0.104790010322250,
            0.140653259715525, 0.169004726639267, 0.190350578064785,
            0.204432940075298, 0.209482141084728};
        static const double wg[4] = {
            0.129484966168870, 0.279705391489277, 0.381830050505119,
            0.417959183673469};

        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double rk = 0.0, rg = 0.0;
        for (int i = 0; i < 8; ++i) {
            const double fx1 = f(c - h * xk[i]);
            const double fx2 = (i == 7) ? fx1 : f(c + h * xk[i]);
            const double fsum = (i == 7) ? fx1 : fx1 + fx2;
            rk += wk[i] * fsum;
            if (i % 2 == 1) rg += wg[i / 2] * fsum;
        }
        rk *= h;
        rg *= h;
        return {rk, std::fabs(rk - rg)};
    }
};

// Integral over [0, +inf) via the exp map t = -log(1-y), after which the
// integrand must decay at least exponentially.
template <typename F>
double integrate_halfline(F&& f, double abs_tol = 1e-11, double cutoff = 60.0) {
    // Split: [0, cutoff] directly; beyond the cutoff the contribution of the
    // integrands used here is below 1e-24.
    return GaussKronrod::integrate(std::forward<F>(f), 0.0, cutoff, abs_tol);
}

}  // namespace hac::detail

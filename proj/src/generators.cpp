#include "hac/generators.hpp"

#include <cmath>

#include "hac/detail/math.hpp"
#include "hac/detail/quadrature.hpp"
#include "hac/detail/solve.hpp"

namespace hac {

using detail::inf;
using detail::logsumexp;

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::F12: return "12";
        case Family::F14: return "14";
        case Family::F19: return "19";
        case Family::F20: return "20";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : all_families)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

Interval theta_range(Family f) {
    switch (f) {
        case Family::A: return Interval::closed_open(0.0, 1.0);
        case Family::C: return Interval::open(0.0, inf);
        case Family::F12: return Interval::closed_open(1.0, inf);
        case Family::F14: return Interval::closed_open(1.0, inf);
        case Family::F19: return Interval::open(0.0, inf);
        case Family::F20: return Interval::open(0.0, inf);
    }
    return {};
}

Interval tau_range(Family f) {
    switch (f) {
        case Family::A: return Interval::closed_open(0.0, 1.0 / 3.0);
        case Family::C: return Interval::open(0.0, 1.0);
        case Family::F12: return Interval::closed_open(1.0 / 3.0, 1.0);
        case Family::F14: return Interval::closed_open(1.0 / 3.0, 1.0);
        case Family::F19: return Interval::open(1.0 / 3.0, 1.0);
        case Family::F20: return Interval::open(0.0, 1.0);
    }
    return {};
}

Generator::Generator(Family f, double th) : family(f), theta(th) {
    if (!std::isfinite(th) || !theta_range(f).contains(th))
        throw std::domain_error("theta " + std::to_string(th) +
                                " outside parameter range of family " + family_name(f));
}

// ---------------------------------------------------------------------------
// psi / psi_inv

double psi(const Generator& g, double t) {
    if (t < 0.0 || std::isnan(t)) throw std::domain_error("psi: t must be >= 0");
    if (t == 0.0) return 1.0;
    if (t == inf) return 0.0;
    const double th = g.theta;
    switch (g.family) {
        case Family::A: {
            const double e = std::exp(-t);
            return (1.0 - th) * e / (1.0 - th * e);
        }
        case Family::C:
            return std::exp(-std::log1p(t) / th);
        case Family::F12:
            return 1.0 / (1.0 + std::exp(std::log(t) / th));
        case Family::F14:
            return std::exp(-th * detail::log1pexp(std::log(t) / th));
        case Family::F19:
            return th / logsumexp(std::log(t), th);
        case Family::F20:
            return std::exp(-std::log(logsumexp(std::log(t), 1.0)) / th);
    }
    return 0.0;
}

double psi_inv(const Generator& g, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("psi_inv: s must be in [0,1]");
    if (s == 1.0) return 0.0;
    if (s == 0.0) return inf;
    const double th = g.theta;
    const double ls = std::log(s);
    switch (g.family) {
        case Family::A:
            return std::log((1.0 - th + th * s) / s);
        case Family::C:
            return std::expm1(-th * ls);
        case Family::F12:
            return std::exp(th * std::log(1.0 / s - 1.0));
        case Family::F14:
            return std::exp(th * std::log(std::expm1(-ls / th)));
        case Family::F19: {
            const double e = th / s;
            if (e > 700.0) return inf;
            return std::exp(e) - std::exp(th);
        }
        case Family::F20: {
            const double q = std::exp(-th * ls);
            if (q > 700.0) return inf;
            return std::exp(q) - std::exp(1.0);
        }
    }
    return 0.0;
}

double psi_deriv(const Generator& g, double t, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("psi_deriv: order must be 1 or 2");
    if (!(t > 0.0)) throw std::domain_error("psi_deriv: t must be > 0");
    const double th = g.theta;
    switch (g.family) {
        case Family::A: {
            const double e = std::exp(t);
            const double d = e - th;
            if (order == 1) return -(1.0 - th) * e / (d * d);
            return (1.0 - th) * e * (e + th) / (d * d * d);
        }
        case Family::C: {
            const double k = 1.0 / th;
            if (order == 1) return -k * std::exp(-(k + 1.0) * std::log1p(t));
            return k * (k + 1.0) * std::exp(-(k + 2.0) * std::log1p(t));
        }
        case Family::F12: {
            const double s = std::exp(std::log(t) / th);
            const double onep = 1.0 + s;
            if (order == 1) return -s / (th * t * onep * onep);
            return s * ((th - 1.0) + (th + 1.0) * s) / (th * th * t * t * onep * onep * onep);
        }
        case Family::F14: {
            const double s = std::exp(std::log(t) / th);
            if (order == 1) return -std::exp(-(th + 1.0) * std::log1p(s)) * s / t;
            return s * (2.0 * th * s + th - 1.0) * std::exp(-(th + 2.0) * std::log1p(s)) /
                   (th * t * t);
        }
        case Family::F19: {
            const double l = logsumexp(std::log(t), th);
            const double te = t + std::exp(th);
            if (order == 1) return -th / (l * l * te);
            return th * (2.0 + l) / (l * l * l * te * te);
        }
        case Family::F20: {
            const double l = logsumexp(std::log(t), 1.0);
            const double te = t + std::exp(1.0);
            const double k = 1.0 / th;
            if (order == 1) return -k * std::exp(-(k + 1.0) * std::log(l)) / te;
            return k * std::exp(-(k + 2.0) * std::log(l)) * (k + 1.0 + l) / (te * te);
        }
    }
    return 0.0;
}

double psi_inv_ratio(const Generator& g, double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("psi_inv_ratio: t must be in (0,1)");
    const double th = g.theta;
    const double lt = std::log(t);
    switch (g.family) {
        case Family::A: {
            const double p = 1.0 - th + th * t;
            const double a = std::log(p / t);
            return -a * t * p / (1.0 - th);
        }
        case Family::C:
            return t * std::expm1(th * lt) / th;
        case Family::F12:
            return -t * (1.0 - t) / th;
        case Family::F14:
            return t * std::expm1(lt / th);
        case Family::F19: {
            const double e = th * (1.0 - 1.0 / t);
            return (t * t / th) * (e < -700.0 ? -1.0 : std::expm1(e));
        }
        case Family::F20: {
            const double q = std::exp(-th * lt);
            const double f = (q > 701.0) ? -1.0 : std::expm1(1.0 - q);
            return std::exp((th + 1.0) * lt) * f / th;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Kendall's tau maps

namespace {

double tau_amh(double th) {
    if (th < 1e-6) return 2.0 * th / 9.0 + th * th / 18.0;
    const double om = 1.0 - th;
    return 1.0 - 2.0 * (th + om * om * std::log1p(-th)) / (3.0 * th * th);
}

double tau_19(double th) {
    // 1 - (2/3) * int_0^inf exp(-x) x^2 / (theta + x) dx
    const double i = detail::integrate_halfline(
        [th](double x) { return std::exp(-x) * x * x / (th + x); }, 1e-13);
    return 1.0 - (2.0 / 3.0) * i;
}

double tau_20(double th) {
    // tau = 1 - 4 B / theta with B = (1/theta) * I and
    // I = int_0^inf exp(-x (theta+2)/theta) (1 - exp(-expm1(x))) dx,
    // obtained from the unit-interval form by x = -theta log t.
    const double rate = (th + 2.0) / th;
    const double cutoff = std::min(60.0, 700.0 / rate);
    const double tol = std::min(1e-12, std::max(2.5e-12 * th * th, 1e-17));
    const double i = detail::GaussKronrod::integrate(
        [rate](double x) {
            const double a = std::expm1(x);
            const double f = (a > 700.0) ? 1.0 : -std::expm1(-a);
            return std::exp(-rate * x) * f;
        },
        0.0, cutoff, tol);
    return 1.0 - 4.0 * i / (th * th);
}

}  // namespace

double tau_of_theta(Family f, double theta) {
    if (!theta_range(f).contains(theta))
        throw std::domain_error("tau_of_theta: theta outside range of family " + family_name(f));
    switch (f) {
        case Family::A: return tau_amh(theta);
        case Family::C: return theta / (theta + 2.0);
        case Family::F12: return 1.0 - 2.0 / (3.0 * theta);
        case Family::F14: return 1.0 - 2.0 / (1.0 + 2.0 * theta);
        case Family::F19: return tau_19(theta);
        case Family::F20: return tau_20(theta);
    }
    return 0.0;
}

double theta_of_tau(Family f, double tau) {
    if (!tau_range(f).contains(tau))
        throw std::domain_error("theta_of_tau: tau " + std::to_string(tau) +
                                " not attainable by family " + family_name(f));
    const double cap = detail_gen::theta_cap;
    switch (f) {
        case Family::C:
            return std::min(2.0 * tau / (1.0 - tau), cap);
        case Family::F12:
            return std::min(2.0 / (3.0 * (1.0 - tau)), cap);
        case Family::F14:
            return std::min((1.0 + tau) / (2.0 * (1.0 - tau)), cap);
        case Family::A:
            if (tau == 0.0) return 0.0;
            return detail::solve_increasing(tau_amh, tau, 0.0, detail::one_minus_eps(), 1e-9);
        case Family::F19:
            return detail::solve_increasing([](double th) { return tau_19(th); }, tau,
                                            detail::eps, cap, 1e-9);
        case Family::F20:
            return detail::solve_increasing([](double th) { return tau_20(th); }, tau,
                                            detail::eps, cap, 1e-9);
    }
    return 0.0;
}

std::pair<double, double> tail_coefficients(const Generator& g) {
    const double th = g.theta;
    switch (g.family) {
        case Family::A: return {0.0, 0.0};
        case Family::C: return {std::exp2(-1.0 / th), 0.0};
        case Family::F12: return {std::exp2(-1.0 / th), 2.0 - std::exp2(1.0 / th)};
        case Family::F14: return {0.5, 2.0 - std::exp2(1.0 / th)};
        case Family::F19: return {1.0, 0.0};
        case Family::F20: return {1.0, 0.0};
    }
    return {0.0, 0.0};
}

// ---------------------------------------------------------------------------
// Bivariate AC surface

double biv_ac_cdf(const Generator& g, double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
        throw std::domain_error("biv_ac_cdf: arguments must be in [0,1]");
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    const double x = psi_inv(g, u) + psi_inv(g, v);
    return psi(g, x);
}

namespace {

// Logs of |psi'| at psi_inv(u), psi_inv(v) and psi_inv(u)+psi_inv(v), plus
// log psi'' at the sum, assembled per family from overflow-safe pieces.
struct BivLogs {
    double d1u, d1v, d1x, d2x;
};

BivLogs biv_logs(const Generator& g, double u, double v) {
    const double th = g.theta;
    const double lu = std::log(u), lv = std::log(v);
    BivLogs r{};
    switch (g.family) {
        case Family::A: {
            const double p = 1.0 - th + th * u, q = 1.0 - th + th * v;
            const double lnE = std::log(p) + std::log(q) - lu - lv;
            const double gg = 1.0 - th * (1.0 - u) * (1.0 - v);
            const double ln_ex_m = std::log1p(-th) + std::log(gg) - lu - lv;  // ln(E-theta)
            const double ln_ex_p = std::log(p * q + th * u * v) - lu - lv;    // ln(E+theta)
            r.d1u = std::log(p) + lu - std::log1p(-th);
            r.d1v = std::log(q) + lv - std::log1p(-th);
            r.d1x = std::log1p(-th) + lnE - 2.0 * ln_ex_m;
            r.d2x = std::log1p(-th) + lnE + ln_ex_p - 3.0 * ln_ex_m;
            break;
        }
        case Family::C: {
            const double k = 1.0 / th;
            const double a1 = -th * lu, a2 = -th * lv;
            const double m = std::max(a1, a2);
            const double w = m + std::log1p(std::exp(std::min(a1, a2) - m) - std::exp(-m));
            r.d1u = -std::log(th) - (k + 1.0) * (-th * lu);
            r.d1v = -std::log(th) - (k + 1.0) * (-th * lv);
            r.d1x = -std::log(th) - (k + 1.0) * w;
            r.d2x = std::log(k) + std::log1p(k) - (k + 2.0) * w;
            break;
        }
        case Family::F12: {
            const double lsu = std::log(1.0 / u - 1.0), lsv = std::log(1.0 / v - 1.0);
            const double lnx = logsumexp(th * lsu, th * lsv);
            const double lsx = std::max(lsu, lsv) +
                               detail::log1pexp(-th * std::fabs(lsu - lsv)) / th;
            const double sx = std::exp(lsx);
            r.d1u = (1.0 - th) * lsu - std::log(th) + 2.0 * lu;
            r.d1v = (1.0 - th) * lsv - std::log(th) + 2.0 * lv;
            r.d1x = lsx - std::log(th) - lnx - 2.0 * std::log1p(sx);
            r.d2x = lsx + std::log((th - 1.0) + (th + 1.0) * sx) - 2.0 * std::log(th) -
                    2.0 * lnx - 3.0 * std::log1p(sx);
            break;
        }
        case Family::F14: {
            const double lsu = std::log(std::expm1(-lu / th));
            const double lsv = std::log(std::expm1(-lv / th));
            const double lsx = std::max(lsu, lsv) +
                               detail::log1pexp(-th * std::fabs(lsu - lsv)) / th;
            const double sx = std::exp(lsx);
            r.d1u = (th + 1.0) * lu / th + (1.0 - th) * lsu;
            r.d1v = (th + 1.0) * lv / th + (1.0 - th) * lsv;
            r.d1x = -(th + 1.0) * std::log1p(sx) + (1.0 - th) * lsx;
            r.d2x = (1.0 - 2.0 * th) * lsx + std::log(2.0 * th * sx + th - 1.0) -
                    std::log(th) - (th + 2.0) * std::log1p(sx);
            break;
        }
        case Family::F19: {
            const double pu = th / u, pv = th / v;
            const double m = std::max(pu, pv);
            const double px = m + std::log1p(std::exp(std::min(pu, pv) - m) - std::exp(th - m));
            r.d1u = std::log(th) - 2.0 * std::log(pu) - pu;
            r.d1v = std::log(th) - 2.0 * std::log(pv) - pv;
            r.d1x = std::log(th) - 2.0 * std::log(px) - px;
            r.d2x = std::log(th) + std::log(2.0 + px) - 3.0 * std::log(px) - 2.0 * px;
            break;
        }
        case Family::F20: {
            const double k = 1.0 / th;
            const double qu = std::exp(-th * lu), qv = std::exp(-th * lv);
            const double m = std::max(qu, qv);
            const double rr = m + std::log1p(std::exp(std::min(qu, qv) - m) - std::exp(1.0 - m));
            r.d1u = -std::log(th) - (k + 1.0) * (-th * lu) - qu;
            r.d1v = -std::log(th) - (k + 1.0) * (-th * lv) - qv;
            r.d1x = -std::log(th) - (k + 1.0) * std::log(rr) - rr;
            r.d2x = -std::log(th) + std::log(k + 1.0 + rr) - (k + 2.0) * std::log(rr) - 2.0 * rr;
            break;
        }
    }
    return r;
}

}  // namespace

double biv_ac_log_density(const Generator& g, double u, double v) {
    if (!(u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0))
        throw std::domain_error("biv_ac_density: arguments must be inside (0,1)");
    const BivLogs l = biv_logs(g, u, v);
    double lc = l.d2x - l.d1u - l.d1v;
    if (std::isnan(lc)) lc = -inf;  // saturated far-tail evaluation
    return std::min(lc, 700.0);
}

double biv_ac_density(const Generator& g, double u, double v) {
    return std::exp(biv_ac_log_density(g, u, v));
}

double biv_ac_conditional(const Generator& g, double u, double v) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("biv_ac_conditional: u inside (0,1)");
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const BivLogs l = biv_logs(g, u, v);
    const double le = l.d1x - l.d1u;
    if (std::isnan(le)) return 0.0;
    return std::min(std::exp(le), 1.0);
}

std::string Interval::str() const {
    const std::string lo = lower_open ? "(" : "[";
    const std::string hi = upper_open ? ")" : "]";
    auto num = [](double x) {
        if (x == inf) return std::string("inf");
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", x);
        return std::string(buf);
    };
    return lo + num(lower) + ", " + num(upper) + hi;
}

}  // namespace hac

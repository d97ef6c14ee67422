#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hac/interval.hpp"

namespace hac {

// One-parameter completely monotone Archimedean families. Numbered labels
// follow the usual catalogue numbering; A is Ali-Mikhail-Haq, C is Clayton.
enum class Family { A = 0, C = 1, F12 = 2, F14 = 3, F19 = 4, F20 = 5 };

inline constexpr std::array<Family, 6> all_families = {
    Family::A, Family::C, Family::F12, Family::F14, Family::F19, Family::F20};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Parameter range Theta_a of the family.
Interval theta_range(Family f);

// Range of attainable Kendall's tau over Theta_a.
Interval tau_range(Family f);

// Generator psi^(a, theta); construction validates theta in Theta_a.
struct Generator {
    Generator(Family f, double theta);
    Family family;
    double theta;

    bool operator==(const Generator& o) const {
        return family == o.family && theta == o.theta;
    }
};

// psi(t) for t in [0, +inf]; non-increasing, psi(0)=1, psi(inf)=0.
double psi(const Generator& g, double t);

// Ordinary inverse on [0,1]; psi_inv(0) = +inf, psi_inv(1) = 0.
double psi_inv(const Generator& g, double s);

// First or second derivative of psi at t > 0.
double psi_deriv(const Generator& g, double t, int order);

// psi_inv(t) / psi_inv'(t) = psi_inv(t) * psi'(psi_inv(t)), in closed form.
// Nonpositive on (0,1); the Kendall distribution of the 2-AC is t minus this.
double psi_inv_ratio(const Generator& g, double t);

// Kendall's tau of the family at theta. Families 19 and 20 use adaptive
// quadrature of their integral forms.
double tau_of_theta(Family f, double theta);

// Inverse of tau_of_theta. Throws std::domain_error when tau is not
// attainable by the family. Unbounded parameter ranges are capped at 1e6.
double theta_of_tau(Family f, double tau);

// (lambda_lower, lambda_upper) tail-dependence coefficients.
std::pair<double, double> tail_coefficients(const Generator& g);

// Bivariate Archimedean copula psi(psi_inv(u) + psi_inv(v)).
double biv_ac_cdf(const Generator& g, double u, double v);

// Density of the bivariate AC; u, v must lie strictly inside (0,1).
double biv_ac_density(const Generator& g, double u, double v);
double biv_ac_log_density(const Generator& g, double u, double v);

// Conditional distribution of V given U=u under the 2-AC:
// psi'(psi_inv(u)+psi_inv(v)) / psi'(psi_inv(u)).
double biv_ac_conditional(const Generator& g, double u, double v);

namespace detail_gen {
// Parameter cap used when inverting tau on families with unbounded ranges.
inline constexpr double theta_cap = 1e6;
}  // namespace detail_gen

}  // namespace hac

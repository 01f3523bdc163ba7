#ifndef ARCOPUC_EQUILIBRIUM_HPP
#define ARCOPUC_EQUILIBRIUM_HPP

#include <complex>

#include "arcopuc/quadrature.hpp"
#include "arcopuc/rational.hpp"

namespace arcopuc {

/// Band edge beta for the constrained equilibrium measure on [-alpha, alpha]
/// with constraint xi/(2 pi): cos(beta) = cos(alpha) + (1 + cos(alpha)) tan^2(pi/(2 xi)).
/// Throws no_band when no probability measure fits under the constraint
/// (cos(beta) > 1); the boundary case cos(beta) = 1 yields the fully
/// saturated measure with beta = 0.
double band_edge(double alpha, double xi);

/// Constrained equilibrium measure and its derived scalar functions.
class EquilibriumData {
public:
    EquilibriumData(double alpha, double xi, QuadratureSpec spec = {});

    double alpha() const { return alpha_; }
    double xi() const { return xi_; }
    double beta() const { return beta_; }
    double ell() const { return ell_; }  ///< Lagrange multiplier, < 0
    double cos_alpha() const { return A_; }
    double cos_beta() const { return B_; }

    /// Density rho(theta) on [-alpha, alpha]; equals xi/(2 pi) on the
    /// saturated arcs. Throws out_of_domain.
    double density_rho(double theta) const;

    /// I(phi) = integral of rho from phi to alpha.
    double band_mass_I(double phi) const;

    /// L(phi) = integral of log|e^{i phi} - e^{i theta}| rho(theta) dtheta.
    double log_transform_L(double phi) const;

    /// g'(z) with sqrt(R) cut on C_beta and sqrt(R) ~ z at infinity.
    std::complex<double> g_prime(std::complex<double> z) const;

    /// g(z) by quadrature of log(z - e^{i theta}) rho(theta) with the branch
    /// cut structure on (-inf,-1] and the arc.
    std::complex<double> g_function(std::complex<double> z) const;

    /// sqrt(R(z)), R = z^2 - 2 z cos(beta) + 1, cut on C_beta, ~ z at infinity.
    std::complex<double> sqrtR(std::complex<double> z) const;

    const QuadratureSpec& spec() const { return spec_; }

private:
    double band_density(double theta) const;  ///< arctan branch inside the band
    double ell_from_integral() const;         ///< single-integral form

    double alpha_, xi_, beta_, A_, B_, ell_;
    double tan_half_;  ///< tan(pi/(2 xi))
    QuadratureSpec spec_;
};

/// Lagrange multiplier alone (builds the measure internally).
double lagrange_multiplier(double alpha, double xi);

/// Unconstrained equilibrium density on (-1/2, 1/2) for period b.
double unconstrained_density(const Rational& b, double x);

/// Critical sampling density xi_alpha solving L(alpha; alpha, xi) = 0 for
/// alpha in [pi/2, pi). Throws no_root for alpha < pi/2.
double xi_critical(double alpha, double tol = 1e-10);

/// beta-tilde on the interval scale: b * beta / (2 pi).
double beta_tilde(const Rational& b, double xi_tilde);

/// L-tilde(x; b, xi_tilde) = L(2 pi x / b; pi/b, b xi_tilde).
double L_tilde(const Rational& b, double xi_tilde, double x);

} // namespace arcopuc

#endif

#ifndef ARCOPUC_ASYMPTOTICS_HPP
#define ARCOPUC_ASYMPTOTICS_HPP

#include <complex>
#include <vector>

#include "arcopuc/airy.hpp"
#include "arcopuc/equilibrium.hpp"
#include "arcopuc/params.hpp"

namespace arcopuc {

enum class Regime { Band, Saturated, HardEdge, Turning, Outer };

const char* regime_name(Regime r);

/// Tagged asymptotic value of the monic polynomial p_M. `value` is the full
/// complex number; `log_prefactor` is the natural log of the exponential
/// factor it contains, so magnitudes survive on the log scale even when the
/// plain value would not.
struct AsymEval {
    Regime regime;
    std::complex<double> value;
    double log_prefactor;
    const char* error_order;     ///< "1/M" or "exp-small"
    bool extrapolated = false;   ///< hard-edge evaluation past the last node
};

/// J(theta) = (cos theta - cos beta)/(1 - cos(beta - theta)), computed in the
/// cancellation-free form sin(beta) cot((beta - theta)/2) - cos(beta).
/// Unbounded at theta = beta (returns +-inf there).
double J_fn(double beta, double theta);

/// gamma(z) = ((z - e^{-i beta})/(z - e^{i beta}))^{1/4} with cut on C_beta
/// and gamma(inf) = 1. Throws on_cut on the arc.
std::complex<double> gamma_fn(double beta, std::complex<double> z);

/// Airy phase function psi near the turning point e^{i beta}: defined on the
/// band arc through the density deficit integral, continued into the disc by
/// a degree-8 polynomial fitted on the arc (radius shrunk until the fit
/// reproduces the quadrature to 5e-10).
class PsiSeries {
public:
    explicit PsiSeries(const EquilibriumData& eq);

    /// psi(z); throws outside_disc beyond the validated radius.
    std::complex<double> psi(std::complex<double> z) const;

    /// psi(z) * (z - e^{-i beta})/(z - e^{i beta}) without the 0 * inf
    /// collision at the turning point.
    std::complex<double> psi_times_r(std::complex<double> z) const;

    /// Direct quadrature value on the band arc (the oracle the fit is
    /// validated against).
    double on_arc(double phi) const;

    double radius() const { return disc_radius_; }
    double slope_at_edge() const { return slope_; }  ///< d psi / d phi at beta

private:
    std::complex<double> h_eval(std::complex<double> d) const;

    const EquilibriumData& eq_;
    double fit_radius_ = 0.0;
    double disc_radius_ = 0.0;
    double slope_ = 0.0;
    std::vector<double> cheb_;  ///< Chebyshev coefficients of h on [-r0, 0]
};

/// Hard-edge Gamma factor D-tilde at u = m(alpha -+ phi)/(2 pi), log-space
/// and direct-space paths. sign = +1 evaluates near +alpha, -1 near -alpha.
double dtilde_log(const ExtensionParams& params, double phi, int sign);
double dtilde(const ExtensionParams& params, double phi, int sign);

/// Interior validity margin of the band formula (Airy zone kept out).
double band_margin(const EquilibriumData& eq, int M);

AsymEval band_asym(const EquilibriumData& eq, const ExtensionParams& params, int M, double phi);
AsymEval saturated_asym(const EquilibriumData& eq, const ExtensionParams& params, int M,
                        double phi, int sign);
AsymEval edge_asym(const EquilibriumData& eq, const ExtensionParams& params, int M, double phi,
                   int sign);
AsymEval turning_asym(const EquilibriumData& eq, const PsiSeries& psi,
                      const ExtensionParams& params, int M, std::complex<double> z);
AsymEval outer_asym(const EquilibriumData& eq, const ExtensionParams& params, int M,
                    std::complex<double> z);

/// Large-M laws for the Szego parameter and norm. The rho sign follows the
/// outer formula at z = 0 (rho_M = -p_M(0)), which the recursion confirms.
struct SzegoAsym {
    double rho;
    double h;
};
SzegoAsym szego_h_asym(const EquilibriumData& eq, int M);

} // namespace arcopuc

#endif

#ifndef ARCOPUC_QUADRATURE_HPP
#define ARCOPUC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace arcopuc {

/// Tolerances and limits for the adaptive integrators. `singularity_splits`
/// are interior points at which the interval is pre-partitioned (density
/// kinks at +-beta, the logarithmic point theta = phi, branch-flip angles).
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 2000;
    std::vector<double> singularity_splits;

    static int default_max_subdivisions();  ///< honors ARCOPUC_MAX_SUBDIV
};

/// Adaptive 15-point Gauss-Kronrod over [a, b] with pre-splits.
/// Throws quadrature_failure when the error estimate cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureSpec& spec);

/// Double-exponential (tanh-sinh) rule on [a, b]; handles integrable endpoint
/// singularities (logarithmic or inverse square root) without splitting.
double integrate_de(const std::function<double(double)>& f, double a, double b,
                    double abs_tol, int max_level = 12);

} // namespace arcopuc

#endif

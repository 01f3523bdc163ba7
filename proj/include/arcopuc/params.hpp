#ifndef ARCOPUC_PARAMS_HPP
#define ARCOPUC_PARAMS_HPP

#include <complex>
#include <vector>

#include "arcopuc/dd.hpp"
#include "arcopuc/rational.hpp"

namespace arcopuc {

/// Problem parameters: extension period b = p/q (exact), space dimension M,
/// sample count N, and everything derived from them.
struct ExtensionParams {
    Rational b;      ///< extension period, > 1
    int M = 0;       ///< dimension of the trigonometric space
    int N = 0;       ///< number of equispaced samples, odd
    int m = 0;       ///< circle resolution m = N b (exact integer)
    double alpha = 0.0;     ///< arc half-angle pi/b
    double xi = 0.0;        ///< m/M
    double xi_tilde = 0.0;  ///< N/M
    int M0 = 0;             ///< min of the frequency window t(M)
};

/// Equispaced nodes on the interval and their images on the arc.
struct ArcLattice {
    std::vector<double> nodes_x;                ///< x_j in [-1/2, 1/2]
    std::vector<std::complex<double>> nodes_z;  ///< e^{2 pi i x_j / b}
    std::vector<double> angles;                 ///< theta_j = 2 pi x_j / b
};

/// Validates (b, M, N) and derives the full bundle.
/// Throws: n_odd_required, non_integer_m, dimension_order, period_too_small.
ExtensionParams make_params(const Rational& b, int M, int N);

/// The N lattice nodes; angles are (2 pi / m)(j - (N+1)/2) so the set is
/// bit-symmetric about the real axis.
ArcLattice lattice_nodes(const ExtensionParams& params);

/// Lattice angle theta_j at full DD precision (j = 1..N).
DD lattice_angle_dd(const ExtensionParams& params, int j);

/// Frequency window t(M) as [M0, M0 + M - 1].
inline int t_window_min(int M) { return (M % 2 == 1) ? -(M - 1) / 2 : -M / 2; }

} // namespace arcopuc

#endif

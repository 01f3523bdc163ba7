#ifndef ARCOPUC_OPUC_HPP
#define ARCOPUC_OPUC_HPP

#include <complex>
#include <vector>

#include "arcopuc/dd.hpp"
#include "arcopuc/params.hpp"

namespace arcopuc {

/// Lattice moments c_k = (1/m) sum_{z in L} z^k, real by symmetry, with
/// c_{k+m} = c_k and c_{-k} = c_k. Built from the Dirichlet-kernel closed
/// form, never by node summation.
class MomentTable {
public:
    MomentTable(const ExtensionParams& params, int k_max);

    DD operator()(long long k) const;
    int k_max() const { return static_cast<int>(c_.size()) - 1; }
    int m() const { return m_; }

private:
    int m_ = 0;
    std::vector<DD> c_;
};

MomentTable moments(const ExtensionParams& params, int k_max);

/// Monic orthogonal polynomials p_0..p_degree_max on the arc lattice with
/// their Szego parameters and norms.
struct OpucSystem {
    ExtensionParams params;
    int degree_max = 0;
    std::vector<std::vector<DD>> coeffs;  ///< coeffs[j][i] of z^i, coeffs[j][j] = 1
    std::vector<DD> rho;                  ///< rho[1..degree_max]; rho[0] unused
    std::vector<DD> h;                    ///< h[0..degree_max], positive
};

/// Szego recursion p_{j+1} = z p_j - rho_{j+1} p_j^* with the parameter from
/// the orthogonality condition <p_{j+1}, 1> = 0; inner products evaluated by
/// moment convolution. Throws lost_orthogonality when |rho| >= 1.
OpucSystem szego_system(const ExtensionParams& params, int M_max);

/// Classical Gram-Schmidt on {1, z, ..., z^{M_max}} with node-summation inner
/// products; independent oracle for szego_system. M_max <= 20.
OpucSystem gram_schmidt_oracle(const ExtensionParams& params, int M_max);

/// Value with a log-magnitude word; value is the plain complex number when it
/// is representable, and log_abs carries |.| on the log scale regardless.
struct EvalResult {
    std::complex<double> value;
    double log_abs;
};

DDComplex eval_monic_dd(const OpucSystem& sys, int j, const DDComplex& z);
EvalResult eval_monic(const OpucSystem& sys, int j, std::complex<double> z);

/// Coefficients of the reverse polynomial p_j^*(z) = z^j p_j(1/z).
std::vector<DD> reverse_poly(const OpucSystem& sys, int j);

/// Orthonormal polynomial phi_j(z) = p_j(z) / sqrt(b h_j).
std::complex<double> normalized_phi(const OpucSystem& sys, int j, std::complex<double> z);
DDComplex normalized_phi_dd(const OpucSystem& sys, int j, const DDComplex& z);

struct KernelValue {
    int n = 0;
    int M = 0;
    std::complex<double> w;
    std::complex<double> value;
};

/// Reproducing kernel K_{n,M}(w): evaluates both the double-sum form and the
/// Christoffel-Darboux closed form and cross-checks them (form_mismatch
/// beyond 1e-12 relative). At lattice nodes only the double sum is used.
KernelValue cd_kernel(const OpucSystem& sys, int n, int M, std::complex<double> w);

/// Error term B^k_{N,M}(x) = w^{k-M0} - K_{k-M0,M}(w), w = e^{2 pi i x / b}.
/// Both the projection form and the kernel form are computed and checked.
std::complex<double> error_term_B(const OpucSystem& sys, int k, double x);

/// Same error term through the tail expansion sum_{j=M}^{n} x_{n,j} p_j(w);
/// requires degree_max >= k - M0.
std::complex<double> error_term_B_tail(const OpucSystem& sys, int k, double x);

/// r_{M,k} and r*_{M,k} by direct lattice summation at DD precision.
struct RQuantities {
    DD r;
    DD r_star;
};
RQuantities r_quantities(const OpucSystem& sys, int M, int k);

/// Expansion coefficients x_{n,j} in z^n = sum_j x_{n,j} p_j(z), by back
/// substitution through the monic triangle.
std::vector<DD> expansion_row(const OpucSystem& sys, int n);
DD expansion_coeff(const OpucSystem& sys, int n, int j);

} // namespace arcopuc

#endif

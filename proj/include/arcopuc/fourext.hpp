#ifndef ARCOPUC_FOUREXT_HPP
#define ARCOPUC_FOUREXT_HPP

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "arcopuc/opuc.hpp"

namespace arcopuc {

/// Fourier coefficients of an extension f-tilde; either finitely supported or
/// carrying a geometric decay envelope |a_k| <= A r^{|k|} past the support.
struct FourierCoeffSeq {
    std::map<int, std::complex<double>> a;
    bool has_envelope = false;
    double envelope_A = 0.0;
    double envelope_r = 0.0;
};

/// Least-squares Fourier extension of lattice samples, stored both in the
/// orthonormal OPUC basis and as coefficients of e^{2 pi i k x / b}, k in t(M).
struct ExtensionApprox {
    ExtensionParams params;
    std::vector<std::complex<double>> coeffs_ortho;    ///< size M
    std::vector<std::complex<double>> coeffs_fourier;  ///< index k - M0, size M
};

/// Projects N samples (ordered by lattice index) onto the trigonometric
/// space through the orthonormal basis; never solves the exponential-basis
/// normal equations. Throws sample_count_mismatch.
ExtensionApprox project(const OpucSystem& sys, const std::vector<std::complex<double>>& samples);

/// Trigonometric-sum evaluation of the approximation; b-periodic.
std::complex<double> eval_extension(const ExtensionApprox& approx, double x);

/// E(x) = f(x) - q(x).
std::complex<double> error_function(const ExtensionApprox& approx,
                                    const std::function<std::complex<double>(double)>& f_exact,
                                    double x);

/// Orthonormal coefficients recovered from Fourier coefficients (triangular
/// basis change); used to validate the roundtrip.
std::vector<std::complex<double>> ortho_from_fourier(const OpucSystem& sys,
                                                     const std::vector<std::complex<double>>& a);

/// Error-series bound sum_{k not in t(M)} |B^k(x)| |a_k| with the tail past
/// k_cutoff controlled by the envelope and the Cauchy-Schwarz bound on B^k.
/// Throws no_envelope when coefficients extend past the cutoff without one.
double error_series_bound(const OpucSystem& sys, const FourierCoeffSeq& a, double x,
                          int k_cutoff);

/// Discrete norm ||f||_N^2 of a sample vector.
double samples_norm2(const ExtensionParams& params, const std::vector<std::complex<double>>& samples);

} // namespace arcopuc

#endif

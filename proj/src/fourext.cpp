#include "arcopuc/fourext.hpp"

#include <cmath>

#include "arcopuc/errors.hpp"

namespace arcopuc {

namespace {
constexpr double kTwoPi = 2.0 * 3.141592653589793238462643383279502884;
using cplx = std::complex<double>;
} // namespace

ExtensionApprox project(const OpucSystem& sys, const std::vector<cplx>& samples) {
    const ExtensionParams& pr = sys.params;
    if (static_cast<int>(samples.size()) != pr.N)
        raise(errc::sample_count_mismatch,
              "expected " + std::to_string(pr.N) + " samples, got " + std::to_string(samples.size()));
    if (sys.degree_max < pr.M - 1) raise(errc::degree_too_large, "system shallower than M");

    const int M = pr.M;
    ExtensionApprox out;
    out.params = pr;
    out.coeffs_ortho.assign(M, cplx{});

    // c_l = (1/N) sum_j f_j z_j^{-M0} conj(phi_l(z_j)), accumulated in DD
    std::vector<DDComplex> acc(M, DDComplex{DD{0.0}, DD{0.0}});
    for (int t = 1; t <= pr.N; ++t) {
        const DD theta = lattice_angle_dd(pr, t);
        const DDComplex z = dd_cis(theta);
        const DDComplex fshift =
            DDComplex{DD{samples[t - 1].real()}, DD{samples[t - 1].imag()}} *
            dd_cis(dd_muli(theta, -pr.M0));
        for (int l = 0; l < M; ++l) acc[l] = acc[l] + fshift * conj(normalized_phi_dd(sys, l, z));
    }
    const DD inv_N = DD{1.0} / DD{static_cast<double>(pr.N)};
    for (int l = 0; l < M; ++l) out.coeffs_ortho[l] = (DDComplex{inv_N} * acc[l]).to_complex();

    // a_{M0 + i} = sum_{l >= i} c_l phi_{l,i}; triangular basis change
    out.coeffs_fourier.assign(M, cplx{});
    for (int i = 0; i < M; ++i) {
        DDComplex s{DD{0.0}, DD{0.0}};
        for (int l = i; l < M; ++l) {
            const DD phi_li = sys.coeffs[l][i] / dd_sqrt(DD{pr.b.value()} * sys.h[l]);
            s = s + DDComplex{DD{out.coeffs_ortho[l].real()}, DD{out.coeffs_ortho[l].imag()}} *
                        DDComplex{phi_li};
        }
        out.coeffs_fourier[i] = s.to_complex();
    }
    return out;
}

std::vector<cplx> ortho_from_fourier(const OpucSystem& sys, const std::vector<cplx>& a) {
    const ExtensionParams& pr = sys.params;
    const int M = static_cast<int>(a.size());
    if (sys.degree_max < M - 1) raise(errc::degree_too_large, "system shallower than coefficients");
    // z^i = sum_{l <= i} x_{i,l} sqrt(b h_l) phi_l
    std::vector<cplx> c(M, cplx{});
    for (int i = 0; i < M; ++i) {
        const std::vector<DD> row = expansion_row(sys, i);
        for (int l = 0; l <= i; ++l) {
            const double w = (row[l] * dd_sqrt(DD{pr.b.value()} * sys.h[l])).to_double();
            c[l] += a[i] * w;
        }
    }
    return c;
}

cplx eval_extension(const ExtensionApprox& approx, double x) {
    const ExtensionParams& pr = approx.params;
    const double base = kTwoPi * x / pr.b.value();
    cplx q{};
    for (int i = 0; i < static_cast<int>(approx.coeffs_fourier.size()); ++i)
        q += approx.coeffs_fourier[i] * std::polar(1.0, (pr.M0 + i) * base);
    return q;
}

cplx error_function(const ExtensionApprox& approx, const std::function<cplx(double)>& f_exact,
                    double x) {
    return f_exact(x) - eval_extension(approx, x);
}

double samples_norm2(const ExtensionParams& params, const std::vector<cplx>& samples) {
    double s = 0.0;
    for (const cplx& v : samples) s += std::norm(v);
    return s / params.N;
}

double error_series_bound(const OpucSystem& sys, const FourierCoeffSeq& a, double x,
                          int k_cutoff) {
    const ExtensionParams& pr = sys.params;
    const int lo = pr.M0, hi = pr.M0 + pr.M - 1;
    double bound = 0.0;
    for (const auto& [k, ak] : a.a) {
        if (k >= lo && k <= hi) continue;  // modes inside t(M) are reproduced exactly
        if (std::abs(k) > k_cutoff) {
            if (!a.has_envelope)
                raise(errc::no_envelope, "coefficients past the cutoff without a decay envelope");
            continue;
        }
        bound += std::abs(error_term_B(sys, k, x)) * std::abs(ak);
    }
    if (a.has_envelope && a.envelope_r > 0.0) {
        if (a.envelope_r >= 1.0) raise(errc::no_envelope, "envelope ratio must be below 1");
        // |B^k(x)| <= 1 + sum_l |phi_l(w)| uniformly in k
        const cplx w = std::polar(1.0, kTwoPi * x / pr.b.value());
        double ub = 1.0;
        for (int l = 0; l < pr.M; ++l) ub += std::abs(normalized_phi(sys, l, w));
        const double r = a.envelope_r;
        bound += ub * a.envelope_A * 2.0 * std::pow(r, k_cutoff + 1) / (1.0 - r);
    }
    return bound;
}

} // namespace arcopuc

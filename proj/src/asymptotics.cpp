#include "arcopuc/asymptotics.hpp"

#include <cmath>

#include "arcopuc/errors.hpp"
#include "arcopuc/quadrature.hpp"

namespace arcopuc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kEulerGamma = 0.5772156649015328606065120900824024;
using cplx = std::complex<double>;

cplx ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
} // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Band: return "band";
        case Regime::Saturated: return "saturated";
        case Regime::HardEdge: return "edge";
        case Regime::Turning: return "turning";
        case Regime::Outer: return "outer";
    }
    return "?";
}

double J_fn(double beta, double theta) {
    const double half = 0.5 * (beta - theta);
    if (half == 0.0) return std::numeric_limits<double>::infinity();
    return std::sin(beta) / std::tan(half) - std::cos(beta);
}

std::complex<double> gamma_fn(double beta, cplx z) {
    const double az = std::abs(z);
    if (std::abs(az - 1.0) < 1e-12 && std::abs(std::arg(z)) <= beta + 1e-12)
        raise(errc::on_cut, "gamma evaluated on the arc C_beta");
    const cplx r = (z - std::polar(1.0, -beta)) / (z - std::polar(1.0, beta));
    cplx g = std::pow(r, 0.25);
    // principal quartic root cuts along the chord Re z = cos(beta); flipping
    // the branch in the lens between chord and arc moves the cut to C_beta
    if (az < 1.0 && z.real() > std::cos(beta)) g *= cplx(0.0, -1.0);
    return g;
}

// ---------------------------------------------------------------- PsiSeries

PsiSeries::PsiSeries(const EquilibriumData& eq) : eq_(eq) {
    const double beta = eq.beta();
    const double alpha = eq.alpha();
    if (!(beta > 0.0) || !(beta < alpha))
        raise(errc::outside_disc, "turning point requires 0 < beta < alpha");
    double r0 = 0.5 * std::min({beta, alpha - beta, 1.0});
    constexpr int kDeg = 8;
    constexpr int kNodes = 24;
    for (int attempt = 0; attempt < 6; ++attempt) {
        // h(d) = psi(beta + d)/d sampled at Chebyshev points of [-r0, 0];
        // h extends analytically through d = 0 with h(0) = psi'(beta) > 0
        std::vector<double> hvals(kNodes);
        for (int i = 0; i < kNodes; ++i) {
            const double t = std::cos(kPi * (2 * i + 1) / (2.0 * kNodes));  // in (-1, 1)
            const double d = 0.5 * r0 * (t - 1.0);
            hvals[i] = on_arc(beta + d) / d;
        }
        // least-squares Chebyshev fit via discrete orthogonality
        cheb_.assign(kDeg + 1, 0.0);
        for (int k = 0; k <= kDeg; ++k) {
            double s = 0.0;
            for (int i = 0; i < kNodes; ++i)
                s += hvals[i] * std::cos(k * kPi * (2 * i + 1) / (2.0 * kNodes));
            cheb_[k] = (k == 0 ? 1.0 : 2.0) * s / kNodes;
        }
        fit_radius_ = r0;
        disc_radius_ = 0.6 * r0;
        // validate against the arc quadrature on the disc the series serves
        double worst = 0.0;
        for (double frac : {0.05, 0.2, 0.35, 0.5, 0.6}) {
            const double phi = beta - frac * r0;
            worst = std::max(worst, std::abs(psi(std::polar(1.0, phi)).real() - on_arc(phi)));
        }
        if (worst < 5e-10) break;
        r0 *= 0.5;
        if (attempt == 5) raise(errc::quadrature_failure, "psi continuation failed to validate");
    }
    slope_ = h_eval(cplx(0.0, 0.0)).real();
}

double PsiSeries::on_arc(double phi) const {
    const double beta = eq_.beta();
    if (phi > beta) raise(errc::out_of_domain, "psi quadrature defined on the band side");
    const double tmax = std::sqrt(beta - phi);
    QuadratureSpec s;
    s.abs_tol = 1e-13;
    s.rel_tol = 1e-13;
    const double xi = eq_.xi();
    const double W = integrate(
        [&](double t) { return 2.0 * t * (xi / kTwoPi - eq_.density_rho(beta - t * t)); }, 0.0,
        tmax, s);
    return -std::pow(1.5 * kPi * W, 2.0 / 3.0);
}

std::complex<double> PsiSeries::h_eval(cplx d) const {
    // Clenshaw on the mapped variable t = 2 d / r0 + 1
    const cplx t = 2.0 * d / fit_radius_ + 1.0;
    cplx b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(cheb_.size()) - 1; k >= 1; --k) {
        const cplx b0 = 2.0 * t * b1 - b2 + cheb_[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + cheb_[0];
}

std::complex<double> PsiSeries::psi(cplx z) const {
    const double beta = eq_.beta();
    const cplx u = z * std::polar(1.0, -beta) - 1.0;
    if (std::abs(u) > disc_radius_ * 1.2)
        raise(errc::outside_disc, "psi beyond the validated disc");
    const cplx d = cplx(0.0, -1.0) * std::log(1.0 + u);
    return d * h_eval(d);
}

std::complex<double> PsiSeries::psi_times_r(cplx z) const {
    const double beta = eq_.beta();
    const cplx u = z * std::polar(1.0, -beta) - 1.0;
    if (std::abs(u) > disc_radius_ * 1.2)
        raise(errc::outside_disc, "psi beyond the validated disc");
    // psi * r = [-i log(1+u)/u] e^{-i beta} h(d) (z - e^{-i beta}); the
    // log(1+u)/u form keeps the product finite at the turning point itself
    cplx lu_over_u;
    if (std::abs(u) < 1e-8) {
        lu_over_u = 1.0 - 0.5 * u + u * u / 3.0;
    } else {
        lu_over_u = std::log(1.0 + u) / u;
    }
    const cplx d = cplx(0.0, -1.0) * ((std::abs(u) < 1e-8) ? u * lu_over_u : std::log(1.0 + u));
    return cplx(0.0, -1.0) * lu_over_u * std::polar(1.0, -beta) * h_eval(d) *
           (z - std::polar(1.0, -beta));
}

// ------------------------------------------------------------------ D-tilde

namespace {
double u_of(const ExtensionParams& params, double phi, int sign) {
    const double alpha = params.alpha;
    const double u = params.m * (alpha - sign * phi) / kTwoPi;
    if (u <= 0.0) raise(errc::domain_error, "D-tilde requires m(alpha -+ phi) > 0");
    return u;
}
} // namespace

double dtilde_log(const ExtensionParams& params, double phi, int sign) {
    // log |D-tilde|; std::lgamma is log |Gamma|, so this covers u < 1/2
    // (where D-tilde is negative) and hits -inf at the pole u = 1/2.
    const double u = u_of(params, phi, sign);
    return 0.5 * std::log(kTwoPi) + (u - 1.0) * std::log(u) - std::lgamma(u - 0.5) - u;
}

double dtilde(const ExtensionParams& params, double phi, int sign) {
    const double u = u_of(params, phi, sign);
    return std::sqrt(kTwoPi) * std::pow(u, u - 1.0) / (std::tgamma(u - 0.5) * std::exp(u));
}

// ------------------------------------------------------------------ regimes

double band_margin(const EquilibriumData& eq, int M) {
    // Airy zone half-width: |psi| <~ 3 M^{-2/3}, psi'(beta) = (pi c)^{2/3}
    const double beta = eq.beta();
    const double xi = eq.xi();
    const double c = (xi / (kPi * kPi)) * std::sqrt(std::sin(beta)) /
                     (std::sqrt(2.0) * std::tan(kPi / (2.0 * xi)) * std::cos(0.5 * beta));
    const double slope = std::pow(kPi * c, 2.0 / 3.0);
    return std::min(3.0 * std::pow(M, -2.0 / 3.0) / slope, 0.45 * beta);
}

AsymEval band_asym(const EquilibriumData& eq, const ExtensionParams& params, int M, double phi) {
    (void)params;
    const double beta = eq.beta();
    if (!(std::abs(phi) < beta)) raise(errc::outside_regime, "band formula needs |phi| < beta");
    const double ell = eq.ell();
    const double I = eq.band_mass_I(phi);
    const double J = J_fn(beta, phi);
    const double arg = M * kPi * I - 0.25 * kPi;
    const cplx bracket = std::polar(std::pow(J, 0.25), -0.25 * beta) * std::cos(arg) -
                         std::polar(std::pow(J, -0.25), 0.25 * beta) * std::sin(arg);
    const cplx pref = std::exp(0.5 * M * ell) * ipow(M) * std::polar(1.0, 0.5 * M * phi);
    return {Regime::Band, pref * bracket, 0.5 * M * ell, "1/M"};
}

namespace {
// Common prefactor of the saturated/edge formulas at z = e^{+i phi}:
// e^{M L} e^{-i phi (m - M)/2} i^M i^N / 2, with e^{i m alpha / 2} = i^N exact.
cplx plus_side_prefactor(const EquilibriumData& eq, const ExtensionParams& params, int M,
                         double phi, double* logpref) {
    const double L = eq.log_transform_L(phi);
    *logpref = M * L;
    return std::exp(M * L) * std::polar(1.0, -0.5 * phi * (params.m - M)) * ipow(M) *
           ipow(params.N) * 0.5;
}

cplx bracket_J(const EquilibriumData& eq, double phi) {
    const double J = J_fn(eq.beta(), phi);
    if (!(J < 0.0)) raise(errc::outside_regime, "saturated formula needs J < 0");
    return std::polar(std::pow(-J, 0.25), -0.25 * eq.beta()) +
           std::polar(std::pow(-J, -0.25), 0.25 * eq.beta());
}

cplx one_minus_zm(const ExtensionParams& params, double phi) {
    // 1 - e^{i m phi} = -2 i sin(m phi / 2) e^{i m phi / 2}
    const double half = 0.5 * params.m * phi;
    return cplx(0.0, -2.0) * std::sin(half) * std::polar(1.0, half);
}
} // namespace

AsymEval saturated_asym(const EquilibriumData& eq, const ExtensionParams& params, int M,
                        double phi, int sign) {
    if (!(phi > eq.beta() && phi < eq.alpha()))
        raise(errc::outside_regime, "saturated formula needs beta < phi < alpha");
    double logpref;
    const cplx plus = plus_side_prefactor(eq, params, M, phi, &logpref) * bracket_J(eq, phi) *
                      one_minus_zm(params, phi);
    // p_M has real coefficients, so the -phi side is the conjugate
    return {Regime::Saturated, sign >= 0 ? plus : std::conj(plus), logpref, "1/M"};
}

AsymEval edge_asym(const EquilibriumData& eq, const ExtensionParams& params, int M, double phi,
                   int sign) {
    if (!(phi > eq.beta() && phi <= eq.alpha() + 1e-14))
        raise(errc::outside_regime, "edge formula needs beta < phi <= alpha");
    const double u = params.m * (params.alpha - phi) / kTwoPi;
    double logpref;
    const cplx base = plus_side_prefactor(eq, params, M, phi, &logpref) * bracket_J(eq, phi);
    // (1 - z^m)/D-tilde with the joint limit across the Gamma pole at the
    // outermost node u = 1/2
    cplx ratio;
    if (std::abs(u - 0.5) < 1e-6) {
        ratio = cplx(0.0, kTwoPi) * std::pow(u, 1.0 - u) * std::exp(u) / std::sqrt(kTwoPi);
    } else {
        ratio = one_minus_zm(params, phi) * std::tgamma(u - 0.5) * std::pow(u, 1.0 - u) *
                std::exp(u) / std::sqrt(kTwoPi);
    }
    AsymEval out{Regime::HardEdge, base * ratio, logpref, "1/M"};
    if (sign < 0) out.value = std::conj(out.value);
    out.extrapolated = (params.alpha - phi) < kTwoPi / (10.0 * params.m);
    return out;
}

AsymEval turning_asym(const EquilibriumData& eq, const PsiSeries& psi,
                      const ExtensionParams& params, int M, cplx z) {
    const double beta = eq.beta();
    const cplx psi_v = psi.psi(z);
    const cplx q = psi.psi_times_r(z);
    const cplx u4 = std::pow(q, 0.25);  // = psi^{1/4} gamma, branch fixed by the recursion
    const AiryValues av = airy(std::pow(static_cast<double>(M), 2.0 / 3.0) * psi_v);
    const cplx zm2 = std::pow(z, 0.5 * params.m);
    const cplx cosf = 0.5 * (zm2 + 1.0 / zm2);
    const cplx sinf = (zm2 - 1.0 / zm2) / cplx(0.0, 2.0);
    const double m16 = std::pow(static_cast<double>(M), 1.0 / 6.0);
    const cplx inner = m16 * u4 * (av.Ai * cosf + av.Bi * sinf) +
                       (av.Aip * cosf + av.Bip * sinf) / (m16 * u4);
    const double ell = eq.ell();
    const cplx pref = cplx(0.0, -1.0) * std::sqrt(kPi) * ipow(params.N + M) *
                      std::exp(0.5 * M * ell) * std::pow(z, 0.5 * M);
    const double logpref = 0.5 * M * ell + 0.5 * M * std::log(std::abs(z));
    (void)beta;
    return {Regime::Turning, pref * inner, logpref, "1/M"};
}

AsymEval outer_asym(const EquilibriumData& eq, const ExtensionParams& params, int M, cplx z) {
    (void)params;
    const double az = std::abs(z);
    if (std::abs(az - 1.0) < 0.02 && std::abs(std::arg(z)) < eq.alpha() + 0.02)
        raise(errc::outside_regime, "outer formula needs distance from the arc");
    const cplx g = eq.g_function(z);
    const cplx gam = gamma_fn(eq.beta(), z);
    return {Regime::Outer, std::exp(static_cast<double>(M) * g) * 0.5 * (gam + 1.0 / gam),
            M * g.real(), "1/M"};
}

SzegoAsym szego_h_asym(const EquilibriumData& eq, int M) {
    const double c = std::cos(0.5 * eq.beta());
    const double rho = (M % 2 == 0) ? -c : c;  // rho_M = -p_M(0), p_M(0) ~ (-1)^M cos(beta/2)
    const double h = std::exp((M + 1.0) * eq.ell()) / std::sin(0.5 * eq.beta());
    return {rho, h};
}

} // namespace arcopuc

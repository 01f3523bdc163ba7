#include "arcopuc/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "arcopuc/dd.hpp"
#include "arcopuc/errors.hpp"

namespace arcopuc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
using cplx = std::complex<double>;
} // namespace

double band_edge(double alpha, double xi) {
    if (!(alpha > 0.0) || !(alpha <= kPi)) raise(errc::out_of_domain, "alpha outside (0, pi]");
    if (!(xi > 1.0)) raise(errc::out_of_domain, "xi must exceed 1");
    const double t = std::tan(kPi / (2.0 * xi));
    const double B = std::cos(alpha) + (1.0 + std::cos(alpha)) * t * t;
    if (B > 1.0 + 64.0 * std::numeric_limits<double>::epsilon())
        raise(errc::no_band, "constraint mass below 1 (xi < pi/alpha)");
    return std::acos(std::min(B, 1.0));
}

EquilibriumData::EquilibriumData(double alpha, double xi, QuadratureSpec spec)
    : alpha_(alpha), xi_(xi), spec_(spec) {
    beta_ = band_edge(alpha, xi);
    A_ = std::cos(alpha_);
    tan_half_ = std::tan(kPi / (2.0 * xi_));
    B_ = std::min(1.0, A_ + (1.0 + A_) * tan_half_ * tan_half_);
    // l = 2 L(beta) = 2 L(0); the closed single-integral form has its upper
    // limit sqrt(2/(1-B)) blow up at the fully saturated boundary, so at and
    // near beta = 0 the defining integral takes over.
    ell_ = (beta_ > 1e-6) ? ell_from_integral() : 2.0 * log_transform_L(0.0);
}

double EquilibriumData::band_density(double theta) const {
    // cos(theta) - cos(beta) in the cancellation-free product form
    const double d = 2.0 * std::sin(0.5 * (beta_ + theta)) * std::sin(0.5 * (beta_ - theta));
    if (d <= 0.0) return xi_ / kTwoPi;  // continuity limit at the band edge
    return (xi_ / (kPi * kPi)) *
           std::atan(std::sqrt(2.0) * tan_half_ * std::cos(0.5 * theta) / std::sqrt(d));
}

double EquilibriumData::density_rho(double theta) const {
    if (std::abs(theta) > alpha_ + 1e-14) raise(errc::out_of_domain, "theta outside [-alpha, alpha]");
    if (std::abs(theta) >= beta_) return xi_ / kTwoPi;
    return band_density(theta);
}

double EquilibriumData::band_mass_I(double phi) const {
    if (std::abs(phi) > alpha_ + 1e-14) raise(errc::out_of_domain, "phi outside [-alpha, alpha]");
    phi = std::clamp(phi, -alpha_, alpha_);
    if (phi >= beta_) return (alpha_ - phi) * xi_ / kTwoPi;
    double total = (alpha_ - beta_) * xi_ / kTwoPi;
    if (phi < -beta_) total += (-beta_ - phi) * xi_ / kTwoPi;
    const double lo = std::max(phi, -beta_);
    // theta = beta - t^2 removes the square-root edge behavior of rho'
    const double tmax = std::sqrt(beta_ - lo);
    QuadratureSpec s = spec_;
    s.singularity_splits.clear();
    total += integrate([&](double t) { return 2.0 * t * band_density(beta_ - t * t); }, 0.0, tmax, s);
    return total;
}

double EquilibriumData::log_transform_L(double phi) const {
    if (std::abs(phi) > alpha_ + 1e-14) raise(errc::out_of_domain, "phi outside [-alpha, alpha]");
    phi = std::clamp(phi, -alpha_, alpha_);
    std::vector<double> cuts{-alpha_, alpha_};
    for (double c : {-beta_, beta_, phi})
        if (c > -alpha_ && c < alpha_) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    // log|e^{i phi} - e^{i theta}| = log(2 |sin((phi-theta)/2)|), stable near theta = phi
    auto f = [&](double theta) {
        return std::log(2.0 * std::abs(std::sin(0.5 * (phi - theta)))) * density_rho(theta);
    };
    double total = 0.0;
    const double panel_tol = std::max(spec_.abs_tol, 1e-13);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_de(f, cuts[i], cuts[i + 1], panel_tol);
    return total;
}

double EquilibriumData::ell_from_integral() const {
    const double t = tan_half_;
    const double upper = std::sqrt(2.0 / (1.0 - B_));
    auto f = [&](double x) {
        const double rad = std::max(0.0, 2.0 - x * x * (1.0 - B_));
        const double num = 1.0 + B_ * x * x + x * std::sqrt(1.0 + B_) * std::sqrt(rad);
        return std::log(num / (x * x - 1.0)) / (1.0 + x * x * t * t);
    };
    const double val = integrate_de(f, 1.0, upper, std::max(spec_.abs_tol, 1e-13));
    return -(2.0 * xi_ * t / kPi) * val;
}

double lagrange_multiplier(double alpha, double xi) {
    return EquilibriumData(alpha, xi).ell();
}

std::complex<double> EquilibriumData::sqrtR(cplx z) const {
    const double az = std::abs(z);
    if (std::abs(az - 1.0) < 1e-12 && std::abs(std::arg(z)) <= beta_ + 1e-12)
        raise(errc::on_cut, "sqrt(R) evaluated on the arc C_beta");
    // sqrt(z) * sqrt(z - 2B + 1/z) has its stray cuts cancel on the real axis
    // and a surviving cut on the far arc; flipping the sign inside the unit
    // disk moves that cut onto C_beta and fixes sqrt(R)(0) = -1.
    const cplx s = std::sqrt(z) * std::sqrt(z - 2.0 * B_ + 1.0 / z);
    return az > 1.0 ? s : -s;
}

std::complex<double> EquilibriumData::g_prime(cplx z) const {
    const cplx w = (z + 1.0) * tan_half_ / sqrtR(z);
    return 0.5 / z + (xi_ / (kPi * z)) * std::atan(w);
}

namespace {
// Region where log(z - e^{i theta}) with cut on (-inf,-1] + the circular arc
// from angle -pi to theta differs from the principal branch by +2 pi i.
// Determined by parity of rightward-ray crossings of the cut arc.
bool needs_branch_correction(cplx z, double theta) {
    const double y = z.imag();
    if (std::abs(y) >= 1.0) return false;
    const double xr = std::sqrt(1.0 - y * y);
    int count = 0;
    for (double xc : {xr, -xr}) {
        if (xc > z.real() && std::atan2(y, xc) <= theta) ++count;
    }
    return (count % 2) == 1;
}
} // namespace

std::complex<double> EquilibriumData::g_function(cplx z) const {
    const double az = std::abs(z);
    if (std::abs(az - 1.0) < 1e-13 && std::abs(std::arg(z)) <= alpha_ + 1e-13)
        raise(errc::on_cut, "g evaluated on the arc C_alpha");
    if (z.imag() == 0.0 && z.real() <= -1.0) raise(errc::on_cut, "g evaluated on (-inf, -1]");

    QuadratureSpec s = spec_;
    s.abs_tol = std::max(spec_.abs_tol, 1e-12);
    s.rel_tol = std::max(spec_.rel_tol, 1e-12);
    s.singularity_splits = {-beta_, beta_};
    const double argz = std::arg(z);
    if (std::abs(argz) < alpha_) s.singularity_splits.push_back(argz);
    // indicator flip angles in theta
    const double y = z.imag();
    if (std::abs(y) < 1.0) {
        const double xr = std::sqrt(1.0 - y * y);
        for (double xc : {xr, -xr}) {
            if (xc > z.real()) {
                const double a = std::atan2(y, xc);
                if (a > -alpha_ && a < alpha_) s.singularity_splits.push_back(a);
            }
        }
    }
    auto f = [&](double theta) -> cplx {
        cplx v = std::log(z - std::polar(1.0, theta));
        if (needs_branch_correction(z, theta)) v += cplx(0.0, kTwoPi);
        return v * density_rho(theta);
    };
    return integrate_complex(f, -alpha_, alpha_, s);
}

double unconstrained_density(const Rational& b, double x) {
    if (!(std::abs(x) < 0.5)) raise(errc::out_of_domain, "x outside (-1/2, 1/2)");
    const double bb = b.value();
    const double rad = std::cos(kTwoPi * x / bb) - std::cos(kPi / bb);
    return std::sqrt(2.0) * std::cos(kPi * x / bb) / (bb * std::sqrt(rad));
}

double xi_critical(double alpha, double tol) {
    if (!(alpha >= 0.5 * kPi - 1e-12)) raise(errc::no_root, "L(alpha; alpha, xi) < 0 for all xi when alpha < pi/2");
    if (!(alpha < kPi)) raise(errc::out_of_domain, "alpha must be below pi");
    auto endpoint_L = [&](double xi) { return EquilibriumData(alpha, xi).log_transform_L(alpha); };
    double lo = kPi / alpha;  // fully saturated boundary; maximum of L(alpha) over xi
    double f_lo = endpoint_L(lo);
    if (std::abs(f_lo) < 1e-9) return lo;  // alpha = pi/2 boundary case
    if (f_lo < 0.0) raise(errc::bracket_failure, "L(alpha) negative at the saturation boundary");
    double hi = 50.0;
    double f_hi = endpoint_L(hi);
    if (f_hi >= 0.0) raise(errc::bracket_failure, "no sign change up to xi = 50");
    // bisection with a secant refinement; L(alpha; alpha, xi) decreases in xi
    double f_mid = f_lo;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (it % 3 == 2 && f_lo != f_hi) {
            const double sec = lo + (hi - lo) * f_lo / (f_lo - f_hi);
            if (sec > lo + 0.01 * (hi - lo) && sec < hi - 0.01 * (hi - lo)) mid = sec;
        }
        f_mid = endpoint_L(mid);
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

double beta_tilde(const Rational& b, double xi_tilde) {
    const double bb = b.value();
    return bb * band_edge(kPi / bb, bb * xi_tilde) / kTwoPi;
}

double L_tilde(const Rational& b, double xi_tilde, double x) {
    if (std::abs(x) > 0.5 + 1e-14) raise(errc::out_of_domain, "x outside [-1/2, 1/2]");
    const double bb = b.value();
    EquilibriumData eq(kPi / bb, bb * xi_tilde);
    return eq.log_transform_L(kTwoPi * x / bb);
}

} // namespace arcopuc

#include "arcopuc/airy.hpp"

#include <cmath>

#include "arcopuc/dd.hpp"
#include "arcopuc/errors.hpp"

namespace arcopuc {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr DD kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kAip0{-0.2588194037928068, 2.522243111610832e-17};

// Maclaurin series of f, g, f', g' (Ai = c1 f - c2 g, Bi = sqrt(3)(c1 f + c2 g)).
AiryValues airy_series(cplx zc) {
    const DDComplex z{DD{zc.real()}, DD{zc.imag()}};
    const DDComplex z3 = z * z * z;
    DDComplex f{DD{1.0}}, g = z, fp{DD{0.0}}, gp{DD{1.0}};
    DDComplex tf{DD{1.0}}, tg = z, tfp{DD{0.0}}, tgp{DD{1.0}};
    // f' first term is z^2/2
    DDComplex tf1 = z * z * DDComplex{DD{0.5}};
    fp = tf1;
    for (int k = 1; k < 200; ++k) {
        const double k3 = 3.0 * k;
        // term-ratio denominators are exact integers; divide at DD precision
        tf = tf * z3 * DDComplex{DD{1.0} / DD{k3 * (k3 - 1.0)}};
        tg = tg * z3 * DDComplex{DD{1.0} / DD{k3 * (k3 + 1.0)}};
        tgp = tgp * z3 * DDComplex{DD{1.0} / DD{k3 * (k3 - 2.0)}};
        if (k >= 2) tf1 = tf1 * z3 * DDComplex{DD{1.0} / DD{(k3 - 1.0) * 3.0 * (k - 1.0)}};
        f = f + tf;
        g = g + tg;
        gp = gp + tgp;
        if (k >= 2) fp = fp + tf1;
        const double rem = std::abs(tf.to_complex()) + std::abs(tg.to_complex());
        const double mag = std::abs(f.to_complex()) + std::abs(g.to_complex()) + 1.0;
        if (rem < 1e-40 * mag) break;
    }
    const DD c1 = kAi0;
    const DD c2 = -kAip0;
    const DD s3 = dd_sqrt(DD{3.0});
    AiryValues out;
    out.Ai = (DDComplex{c1} * f - DDComplex{c2} * g).to_complex();
    out.Bi = (DDComplex{s3} * (DDComplex{c1} * f + DDComplex{c2} * g)).to_complex();
    out.Aip = (DDComplex{c1} * fp - DDComplex{c2} * gp).to_complex();
    out.Bip = (DDComplex{s3} * (DDComplex{c1} * fp + DDComplex{c2} * gp)).to_complex();
    return out;
}

// Asymptotic expansions for Ai, Ai' (and Bi, Bi' in the narrow sector).
// Truncated at the smallest term.
void asym_sums(cplx inv_zeta, cplx& S_u_alt, cplx& S_v_alt, cplx& S_u, cplx& S_v) {
    double u = 1.0;
    cplx pow{1.0, 0.0};
    S_u_alt = S_u = cplx(1.0, 0.0);
    S_v_alt = S_v = cplx(1.0, 0.0);
    double prev = 1e300;
    for (int k = 1; k <= 40; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
        const double v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        pow *= inv_zeta;
        const double mag = u * std::abs(pow);
        if (mag > prev) break;  // divergence point reached
        prev = mag;
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        S_u_alt += sgn * u * pow;
        S_v_alt += sgn * v * pow;
        S_u += u * pow;
        S_v += v * pow;
        if (mag < 1e-18) break;
    }
}

void airy_asym_core(cplx z, cplx& Ai, cplx& Aip, cplx* Bi, cplx* Bip) {
    const cplx sz = std::sqrt(z);
    const cplx zeta = (2.0 / 3.0) * z * sz;
    const cplx z14 = std::sqrt(sz);
    cplx Sua, Sva, Su, Sv;
    asym_sums(1.0 / zeta, Sua, Sva, Su, Sv);
    const double sqpi = std::sqrt(kPi);
    Ai = std::exp(-zeta) / (2.0 * sqpi * z14) * Sua;
    Aip = -z14 * std::exp(-zeta) / (2.0 * sqpi) * Sva;
    if (Bi) *Bi = std::exp(zeta) / (sqpi * z14) * Su;
    if (Bip) *Bip = z14 * std::exp(zeta) / sqpi * Sv;
}

AiryValues airy_asym(cplx z) {
    const cplx w = std::polar(1.0, 2.0 * kPi / 3.0);
    AiryValues out;
    const double az = std::abs(std::arg(z));
    if (az <= 2.0) {
        airy_asym_core(z, out.Ai, out.Aip, nullptr, nullptr);
    } else {
        // rotate into the good sector: Ai(z) = -[e^{-2pi i/3} Ai(z e^{-2pi i/3})
        //                                      + e^{+2pi i/3} Ai(z e^{+2pi i/3})]
        cplx a1, a1p, a2, a2p;
        airy_asym_core(z * w, a1, a1p, nullptr, nullptr);
        airy_asym_core(z / w, a2, a2p, nullptr, nullptr);
        out.Ai = -(w * a1 + a2 / w);
        out.Aip = -(w * w * a1p + a2p / (w * w));
    }
    if (az <= 0.9) {
        cplx ai, aip;
        airy_asym_core(z, ai, aip, &out.Bi, &out.Bip);
    } else {
        cplx a1, a1p, a2, a2p;
        airy_asym_core(z * w, a1, a1p, nullptr, nullptr);
        airy_asym_core(z / w, a2, a2p, nullptr, nullptr);
        const cplx e6 = std::polar(1.0, kPi / 6.0);
        const cplx e56 = std::polar(1.0, 5.0 * kPi / 6.0);
        out.Bi = e6 * a1 + a2 / e6;
        out.Bip = e56 * a1p + a2p / e56;
    }
    // real axis stays real
    if (z.imag() == 0.0) {
        out.Ai = cplx(out.Ai.real(), 0.0);
        out.Bi = cplx(out.Bi.real(), 0.0);
        out.Aip = cplx(out.Aip.real(), 0.0);
        out.Bip = cplx(out.Bip.real(), 0.0);
    }
    return out;
}

} // namespace

AiryValues airy(cplx z) {
    const double az = std::abs(z);
    if (!(az <= 30.0)) raise(errc::envelope_exceeded, "airy argument beyond |z| = 30");
    if (az <= 8.0) return airy_series(z);
    return airy_asym(z);
}

double SpecialFnTable::log_gamma(double x) const {
    if (x <= 0.0 && x == std::floor(x)) raise(errc::domain_error, "log-gamma pole");
    return std::lgamma(x);
}

} // namespace arcopuc

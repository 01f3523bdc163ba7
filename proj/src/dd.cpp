#include "arcopuc/dd.hpp"

#include <array>

namespace arcopuc {

using eft::quick_two_sum;
using eft::two_prod;
using eft::two_sum;

DD operator+(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

DD operator-(const DD& a, const DD& b) { return a + DD{-b.hi, -b.lo}; }

DD operator*(const DD& a, const DD& b) {
    // canonical operand order keeps the product bitwise commutative
    const bool swap = std::abs(b.hi) > std::abs(a.hi) ||
                      (b.hi == a.hi && std::abs(b.lo) > std::abs(a.lo));
    const DD& x = swap ? b : a;
    const DD& y = swap ? a : b;
    DD p = two_prod(x.hi, y.hi);
    p.lo += std::fma(x.hi, y.lo, x.lo * y.hi);
    return quick_two_sum(p.hi, p.lo);
}

DD operator/(const DD& a, const DD& b) {
    if (b.hi == 0.0 && b.lo == 0.0) raise(errc::divide_by_zero, "DD division by zero");
    const double q1 = a.hi / b.hi;
    DD r = a - b * DD{q1};
    const double q2 = r.hi / b.hi;
    r = r - b * DD{q2};
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD{q3};
}

DD dd_sqrt(const DD& a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {0.0};
    if (a.hi < 0.0) raise(errc::domain_error, "sqrt of negative DD");
    const double x = 1.0 / std::sqrt(a.hi);
    const double s = a.hi * x;
    const DD e = a - DD{s} * DD{s};
    return DD{s} + DD{e.hi * (x * 0.5)};
}

// exp via k*ln2 reduction then scaled Taylor series with 9 doublings.
DD dd_exp(const DD& a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -709.0) return {0.0};
    const double k = std::nearbyint(a.hi / ddc::ln2.hi);
    const DD r = (a - dd_muli(ddc::ln2, static_cast<long long>(k)));
    const DD s = r / DD{512.0};
    // expm1 by Taylor on |s| <= ~7e-4
    DD sum = s;
    DD term = s;
    for (int i = 2; i <= 9; ++i) {
        term = term * s / DD{static_cast<double>(i)};
        sum += term;
        if (std::abs(term.hi) < 1e-40 * std::abs(sum.hi)) break;
    }
    // (1+y)^2 - 1 = 2y + y^2, nine times
    for (int i = 0; i < 9; ++i) sum = dd_muli(sum, 2) + sum * sum;
    DD result = sum + DD{1.0};
    return DD{std::ldexp(result.hi, static_cast<int>(k)), std::ldexp(result.lo, static_cast<int>(k))};
}

DD dd_log(const DD& a) {
    if (a.hi <= 0.0) raise(errc::domain_error, "log of non-positive DD");
    // Newton on exp(y) = a from the native seed, one step doubles precision.
    DD y{std::log(a.hi)};
    y = y + a * dd_exp(-y) - DD{1.0};
    return y;
}

namespace {
// sin/cos Taylor on |r| <= pi/4.
void sincos_taylor(const DD& r, DD& s, DD& c) {
    const DD r2 = r * r;
    DD term = r;
    DD sum = r;
    for (int i = 1; i <= 14; ++i) {
        const double d = static_cast<double>(2 * i) * static_cast<double>(2 * i + 1);
        term = -(term * r2) / DD{d};
        sum += term;
        if (std::abs(term.hi) < 1e-36 * std::abs(sum.hi) + 1e-320) break;
    }
    s = sum;
    term = DD{1.0};
    sum = DD{1.0};
    for (int i = 1; i <= 14; ++i) {
        const double d = static_cast<double>(2 * i - 1) * static_cast<double>(2 * i);
        term = -(term * r2) / DD{d};
        sum += term;
        if (std::abs(term.hi) < 1e-36 * std::abs(sum.hi) + 1e-320) break;
    }
    c = sum;
}
} // namespace

void dd_sincos(const DD& a, DD& s, DD& c) {
    if (!a.finite()) raise(errc::domain_error, "sincos of non-finite DD");
    // quadrant reduction: a = k*(pi/2) + r, |r| <= pi/4
    const double k = std::nearbyint((a / ddc::pi_half).to_double());
    const DD r = a - dd_muli(ddc::pi_half, static_cast<long long>(k));
    DD sr, cr;
    sincos_taylor(r, sr, cr);
    const long long q = static_cast<long long>(k) & 3LL;
    switch (q < 0 ? q + 4 : q) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

DD dd_sin(const DD& a) {
    DD s, c;
    dd_sincos(a, s, c);
    return s;
}

DD dd_cos(const DD& a) {
    DD s, c;
    dd_sincos(a, s, c);
    return c;
}

DD dd_atan(const DD& a) {
    // Newton on tan(t) = a: t' = t + (a cos t - sin t) cos t
    DD t{std::atan(a.hi)};
    for (int i = 0; i < 2; ++i) {
        DD s, c;
        dd_sincos(t, s, c);
        t = t + (a * c - s) * c;
    }
    return t;
}

} // namespace arcopuc

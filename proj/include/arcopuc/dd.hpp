#ifndef ARCOPUC_DD_HPP
#define ARCOPUC_DD_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "arcopuc/errors.hpp"

namespace arcopuc {

/// Double-word (compensated) floating-point scalar: value = hi + lo with
/// |lo| <= ulp(hi)/2. Gives roughly twice native precision, which is what
/// keeps the Szego recursion alive at degrees where native Gram data is
/// destroyed by the e^{ML} growth of the polynomials.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
    explicit operator double() const { return hi + lo; }

    bool finite() const { return std::isfinite(hi) && std::isfinite(lo); }
};

namespace eft {
// Error-free transformations. two_sum/two_prod return the exact rounding
// error of the native operation in the second word.
inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}
inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double v = s - a;
    return {s, (a - (s - v)) + (b - v)};
}
inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}
} // namespace eft

DD operator+(const DD& a, const DD& b);
DD operator-(const DD& a, const DD& b);
DD operator*(const DD& a, const DD& b);
DD operator/(const DD& a, const DD& b);

inline DD operator-(const DD& a) { return {-a.hi, -a.lo}; }
inline DD& operator+=(DD& a, const DD& b) { a = a + b; return a; }
inline DD& operator-=(DD& a, const DD& b) { a = a - b; return a; }
inline DD& operator*=(DD& a, const DD& b) { a = a * b; return a; }
inline DD& operator/=(DD& a, const DD& b) { a = a / b; return a; }

inline bool operator<(const DD& a, const DD& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DD& a, const DD& b) { return b < a; }
inline bool operator==(const DD& a, const DD& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator<=(const DD& a, const DD& b) { return !(b < a); }
inline bool operator>=(const DD& a, const DD& b) { return !(a < b); }

inline DD dd_abs(const DD& a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

DD dd_sqrt(const DD& a);
DD dd_exp(const DD& a);
DD dd_log(const DD& a);
DD dd_sin(const DD& a);
DD dd_cos(const DD& a);
DD dd_atan(const DD& a);
void dd_sincos(const DD& a, DD& s, DD& c);

/// Multiplies by an exact small integer.
inline DD dd_muli(const DD& a, long long k) {
    DD p = eft::two_prod(a.hi, static_cast<double>(k));
    p.lo += a.lo * static_cast<double>(k);
    return eft::quick_two_sum(p.hi, p.lo);
}

namespace ddc {
inline constexpr DD two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DD pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DD pi_half{1.5707963267948966, 6.123233995736766e-17};
inline constexpr DD pi_quarter{0.7853981633974483, 3.061616997868383e-17};
inline constexpr DD ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DD e{2.718281828459045, 1.4456468917292502e-16};
} // namespace ddc

/// Complex value with DD components.
struct DDComplex {
    DD re, im;

    DDComplex() = default;
    DDComplex(DD r) : re(r), im(0.0) {}
    DDComplex(DD r, DD i) : re(r), im(i) {}
    DDComplex(double r) : re(r), im(0.0) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline DDComplex operator+(const DDComplex& a, const DDComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline DDComplex operator-(const DDComplex& a, const DDComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline DDComplex operator*(const DDComplex& a, const DDComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DDComplex operator*(const DD& a, const DDComplex& b) { return {a * b.re, a * b.im}; }
inline DDComplex conj(const DDComplex& a) { return {a.re, -a.im}; }
inline DD norm2(const DDComplex& a) { return a.re * a.re + a.im * a.im; }
inline DDComplex operator/(const DDComplex& a, const DDComplex& b) {
    const DD d = norm2(b);
    const DDComplex n = a * conj(b);
    return {n.re / d, n.im / d};
}
inline DD dd_abs(const DDComplex& a) { return dd_sqrt(norm2(a)); }

/// e^{i theta}.
inline DDComplex dd_cis(const DD& theta) {
    DD s, c;
    dd_sincos(theta, s, c);
    return {c, s};
}

} // namespace arcopuc

#endif

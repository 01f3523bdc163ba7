#ifndef ARCOPUC_RATIONAL_HPP
#define ARCOPUC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "arcopuc/errors.hpp"

namespace arcopuc {

/// Exact rational p/q with small integer parts. Used for the extension
/// period b and for angle inputs given as rational multiples of pi, so
/// integrality conditions (m = Nb) are decided exactly.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) raise(errc::divide_by_zero, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator*(std::int64_t k, const Rational& r) { return Rational(k * r.num, r.den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Parses "p", "p/q". Throws on malformed input.
Rational parse_rational(const std::string& text);

} // namespace arcopuc

#endif

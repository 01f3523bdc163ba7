#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "arcopuc/dd.hpp"

using namespace arcopuc;

namespace {

// Exact-arithmetic oracle: Shewchuk expansions. A list of doubles whose exact
// sum is the represented value; two_sum keeps every bit, so sums and products
// of doubles are manipulated as exact binary rationals.
std::vector<double> grow_expansion(std::vector<double> e, double b) {
    std::vector<double> out;
    double q = b;
    for (double x : e) {
        const DD s = eft::two_sum(q, x);
        if (s.lo != 0.0) out.push_back(s.lo);
        q = s.hi;
    }
    out.push_back(q);
    return out;
}

std::vector<double> exact_add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> e = a;
    for (double x : b) e = grow_expansion(e, x);
    return e;
}

std::vector<double> exact_mul_dd(const DD& a, const DD& b) {
    std::vector<double> e;
    for (double x : {a.hi, a.lo})
        for (double y : {b.hi, b.lo}) {
            const DD p = eft::two_prod(x, y);
            e = grow_expansion(e, p.lo);
            e = grow_expansion(e, p.hi);
        }
    return e;
}

// Residual of (expansion - d) relative to the expansion magnitude.
double rel_error_vs(const std::vector<double>& exact, const DD& d) {
    std::vector<double> r = exact_add(exact, {-d.hi, -d.lo});
    double resid = 0.0, mag = 0.0;
    for (double x : r) resid += x;
    for (double x : exact) mag += x;
    return std::abs(resid) / std::max(std::abs(mag), 1e-300);
}

DD random_dd(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-12, 12);
    const double hi = std::ldexp(mant(rng), expo(rng));
    const double lo = hi * 1e-17 * mant(rng);
    return eft::quick_two_sum(hi, lo);
}

} // namespace

TEST_CASE("exactly representable arithmetic") {
    CHECK((DD{1.0} + DD{1.0}).hi == 2.0);
    CHECK((DD{1.0} + DD{1.0}).lo == 0.0);
    CHECK(dd_sqrt(DD{4.0}).hi == 2.0);
    CHECK(dd_sqrt(DD{4.0}).lo == 0.0);
}

TEST_CASE("mul of 1 + 2^-30 hits the exact square") {
    const DD x{1.0 + std::ldexp(1.0, -30)};
    const DD p = x * x;
    // exact value 1 + 2^-29 + 2^-60
    CHECK(p.hi == doctest::Approx(1.0000000018626451).epsilon(1e-18));
    CHECK(rel_error_vs(exact_mul_dd(x, x), p) <= std::ldexp(1.0, -104));
}

TEST_CASE("add and mul against the expansion oracle") {
    std::mt19937_64 rng(0xa5c0ffee);
    double worst_add = 0.0, worst_mul = 0.0;
    for (int i = 0; i < 5000; ++i) {
        const DD a = random_dd(rng);
        const DD b = random_dd(rng);
        worst_add = std::max(worst_add, rel_error_vs(exact_add({a.hi, a.lo}, {b.hi, b.lo}), a + b));
        worst_mul = std::max(worst_mul, rel_error_vs(exact_mul_dd(a, b), a * b));
    }
    CHECK(worst_add <= std::ldexp(1.0, -104));
    CHECK(worst_mul <= std::ldexp(1.0, -104));
}

TEST_CASE("div-mul roundtrip") {
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const DD a = random_dd(rng);
        DD b = random_dd(rng);
        if (std::abs(b.hi) < 1e-6) b = DD{1.0} + b;
        const DD back = (a / b) * b;
        const DD diff = back - a;
        worst = std::max(worst, std::abs(diff.to_double()) / std::max(std::abs(a.to_double()), 1e-300));
    }
    CHECK(worst <= std::ldexp(1.0, -100));
}

TEST_CASE("bitwise commutativity and self-subtraction") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const DD a = random_dd(rng);
        const DD b = random_dd(rng);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        const DD z = a - a;
        CHECK(z.hi == 0.0);
        CHECK(z.lo == 0.0);
    }
}

TEST_CASE("monotone under small perturbation") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        DD a = random_dd(rng);
        if (a.hi < 0) a = -a;
        const DD b = random_dd(rng);
        const DD delta = a * DD{std::ldexp(1.0, -100)};
        CHECK(((a + delta) + b >= a + b));
        CHECK((dd_sqrt(a + delta) >= dd_sqrt(a)));
    }
}

TEST_CASE("exp(log(x)) roundtrip over twelve decades") {
    double worst = 0.0;
    for (double x = 1e-6; x < 1e6; x *= 3.7) {
        const DD y = dd_exp(dd_log(DD{x}));
        worst = std::max(worst, std::abs((y - DD{x}).to_double()) / x);
    }
    CHECK(worst <= std::ldexp(1.0, -88));
}

TEST_CASE("sin^2 + cos^2 identity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        DD s, c;
        dd_sincos(DD{dist(rng)}, s, c);
        worst = std::max(worst, std::abs((s * s + c * c - DD{1.0}).to_double()));
    }
    CHECK(worst <= std::ldexp(1.0, -90));
}

TEST_CASE("elementary functions match native at coarse precision") {
    for (double x : {0.1, 0.9, 2.0, 14.0}) {
        CHECK(dd_exp(DD{x}).to_double() == doctest::Approx(std::exp(x)).epsilon(1e-14));
        CHECK(dd_log(DD{x}).to_double() == doctest::Approx(std::log(x)).epsilon(1e-14));
        CHECK(dd_atan(DD{x}).to_double() == doctest::Approx(std::atan(x)).epsilon(1e-14));
        CHECK(dd_sin(DD{x}).to_double() == doctest::Approx(std::sin(x)).epsilon(1e-13));
    }
}

TEST_CASE("division by zero and domain errors") {
    CHECK_THROWS_AS(DD{1.0} / DD{0.0}, Error);
    CHECK_THROWS_AS(dd_log(DD{-1.0}), Error);
    CHECK_THROWS_AS(dd_sqrt(DD{-2.0}), Error);
}

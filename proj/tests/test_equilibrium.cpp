#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "arcopuc/equilibrium.hpp"
#include "arcopuc/errors.hpp"

using namespace arcopuc;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}

TEST_CASE("band edge reproduces the figure captions") {
    // references computed independently at 40 digits from
    // cos(beta) = cos(alpha) + (1 + cos(alpha)) tan^2(pi/(2 xi))
    CHECK(band_edge(5 * kPi / 6, 32.0 / 25.0) == doctest::Approx(1.38935515188226).epsilon(1e-12));
    CHECK(band_edge(5 * kPi / 6, 7.0) == doctest::Approx(2.60419939631858).epsilon(1e-12));
    CHECK(band_edge(kPi / 2, 5.0) == doctest::Approx(1.46502641524556).epsilon(1e-12));
}

TEST_CASE("band edge limits and failure modes") {
    CHECK(std::abs(band_edge(kPi / 2, 1e6) - kPi / 2) < 1e-10);  // beta -> alpha
    CHECK(band_edge(kPi / 2, 2.0) == doctest::Approx(0.0));      // fully saturated boundary
    CHECK_THROWS_AS(band_edge(kPi / 3, 1.5), Error);             // xi below pi/alpha
    CHECK_THROWS_AS(band_edge(kPi / 3, 2.0), Error);
    CHECK_THROWS_AS(band_edge(kPi / 2, 1.5), Error);
}

TEST_CASE("density branches and normalization") {
    EquilibriumData eq(5 * kPi / 6, 2.0);
    const double sat = eq.xi() / kTwoPi;
    for (double f : {0.1, 0.5, 0.9})
        CHECK(eq.density_rho(eq.beta() + f * (eq.alpha() - eq.beta())) == sat);
    // continuity at the band edge from inside
    CHECK(eq.density_rho(eq.beta() - 1e-9) == doctest::Approx(sat).epsilon(1e-4));
    CHECK(eq.density_rho(0.0) < sat);
    CHECK_THROWS_AS(eq.density_rho(eq.alpha() + 0.1), Error);
    CHECK(eq.band_mass_I(-eq.alpha()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eq.band_mass_I(eq.alpha()) == doctest::Approx(0.0));
}

TEST_CASE("I differences integrate the density") {
    EquilibriumData eq(kPi / 2, 5.0);
    QuadratureSpec s;
    s.abs_tol = s.rel_tol = 1e-12;
    s.singularity_splits = {-eq.beta(), eq.beta()};
    for (const auto& [p1, p2] : {std::pair{-1.2, 0.4}, {0.0, 1.3}, {-1.5, 1.5}}) {
        const double direct = integrate([&](double t) { return eq.density_rho(t); }, p1, p2, s);
        CHECK(eq.band_mass_I(p1) - eq.band_mass_I(p2) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("uniform-circle limit of I") {
    EquilibriumData eq(kPi, 1e6);
    for (double phi : {0.3, 1.0, 2.5})
        CHECK(eq.band_mass_I(phi) == doctest::Approx((kPi - phi) / kTwoPi).epsilon(1e-9));
}

TEST_CASE("closed-form zeros of L") {
    EquilibriumData deg(kPi / 2, 2.0);  // beta = 0, rho = 1/pi
    CHECK(std::abs(deg.log_transform_L(kPi / 2)) < 1e-9);
    for (double xi : {2.0, 5.0}) {
        EquilibriumData full(kPi, xi);
        for (double phi : {0.0, 1.0, 2.0}) CHECK(std::abs(full.log_transform_L(phi)) < 1e-9);
    }
}

TEST_CASE("L constant on the band at half the multiplier") {
    EquilibriumData eq(5 * kPi / 6, 32.0 / 25.0);
    const double l = eq.ell();
    for (int i = 0; i < 20; ++i) {
        const double phi = -eq.beta() + (2.0 * i / 19.0) * eq.beta();
        CHECK(std::abs(2.0 * eq.log_transform_L(phi) - l) < 1e-9);
    }
}

TEST_CASE("Lagrange multiplier: sign, dual form, frozen values") {
    for (const auto& [alpha, xi] : {std::pair{kPi / 3, 7.0}, {kPi / 2, 7.0}, {5 * kPi / 6, 1.5},
                                    {5 * kPi / 6, 2.0}, {5 * kPi / 6, 7.0}}) {
        EquilibriumData eq(alpha, xi);
        CHECK(eq.ell() < 0.0);
        // eq39 single integral vs the defining double form 2 L(0) and 2 L(beta)
        CHECK(eq.ell() == doctest::Approx(2.0 * eq.log_transform_L(0.0)).epsilon(1e-8));
        CHECK(std::abs(eq.ell() - 2.0 * eq.log_transform_L(eq.beta())) < 1e-8);
    }
    // 40-digit references
    CHECK(lagrange_multiplier(kPi / 3, 7.0) == doctest::Approx(-1.440276069).epsilon(1e-8));
    CHECK(lagrange_multiplier(kPi / 2, 7.0) == doctest::Approx(-0.7105502961).epsilon(1e-8));
    CHECK(lagrange_multiplier(kPi / 2, 5.0) == doctest::Approx(-0.72852817850323).epsilon(1e-9));
    CHECK(lagrange_multiplier(5 * kPi / 6, 1.5) == doctest::Approx(-0.1191458514).epsilon(1e-7));
    // degenerate boundary: l(pi/2, 2) = -4 Catalan / pi
    CHECK(lagrange_multiplier(kPi / 2, 2.0) == doctest::Approx(-1.166243616123275).epsilon(1e-8));
}

TEST_CASE("xi -> infinity limit of the multiplier") {
    const double l4 = lagrange_multiplier(kPi / 2, 1e4);
    const double A = std::cos(kPi / 2);
    const double up = std::sqrt(2.0 / (1.0 - A));
    const double linf = -integrate_de(
        [&](double x) {
            const double rad = std::max(0.0, 2.0 - x * x * (1.0 - A));
            return std::log((1.0 + A * x * x + x * std::sqrt(1.0 + A) * std::sqrt(rad)) /
                            (x * x - 1.0));
        },
        1.0, up, 1e-12);
    CHECK(std::abs(l4 - linf) < 1e-3);
}

TEST_CASE("Euler-Lagrange conditions") {
    EquilibriumData eq(kPi / 2, 5.0);
    for (int i = 0; i < 20; ++i) {
        const double phi = -0.95 * eq.beta() + 1.9 * eq.beta() * i / 19.0;
        CHECK(std::abs(2.0 * eq.log_transform_L(phi) - eq.ell()) < 1e-9);
    }
    const double mid = 0.5 * (eq.beta() + eq.alpha());
    CHECK(2.0 * eq.log_transform_L(mid) - eq.ell() > 1e-6);  // strict in the saturated region
    CHECK(2.0 * eq.log_transform_L(-mid) - eq.ell() > 1e-6);
}

TEST_CASE("monotonicity battery") {
    EquilibriumData eq(5 * kPi / 6, 2.0);
    double prev = eq.log_transform_L(eq.beta() + 1e-4);
    for (int i = 1; i <= 10; ++i) {
        const double phi = eq.beta() + 1e-4 + i * (eq.alpha() - eq.beta() - 2e-4) / 10.0;
        const double cur = eq.log_transform_L(phi);
        CHECK(cur >= prev - 1e-10);
        prev = cur;
    }
    double prev_band = -1e9, prev_end = 1e9;
    for (double xi : {1.5, 2.0, 3.0, 5.0}) {
        EquilibriumData e(5 * kPi / 6, xi);
        const double band_val = e.log_transform_L(0.0);
        const double end_val = e.log_transform_L(e.alpha());
        CHECK(band_val > prev_band);
        CHECK(end_val < prev_end);
        prev_band = band_val;
        prev_end = end_val;
    }
    // concave second differences of L(alpha; alpha, pi/alpha) on [pi/2, pi]
    auto clausen_like = [](double alpha) {
        EquilibriumData e(alpha, kPi / alpha);
        return e.log_transform_L(alpha);
    };
    const double h = 0.05;
    for (double a : {1.7, 2.1, 2.5, 2.9}) {
        const double second = clausen_like(a - h) - 2.0 * clausen_like(a) + clausen_like(a + h);
        CHECK(second < 1e-8);
    }
}

TEST_CASE("g-prime structure") {
    EquilibriumData eq(kPi / 2, 5.0);
    const double big = 2e6;
    CHECK(std::abs(big * eq.g_prime(big) - 1.0) < 1e-5);  // z g' -> 1
    CHECK(std::abs(1e-7 * eq.g_prime(cplx(1e-7, 0.0))) < 1e-6);  // no pole at 0
    CHECK(std::abs(eq.sqrtR(cplx(1e-14, 0.0)) + 1.0) < 1e-10);   // sqrt(R)(0) = -1
    const cplx z(2.0, 0.5);
    const double h = 1e-6;
    const cplx fd = (eq.g_function(z + h) - eq.g_function(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - eq.g_prime(z)) < 1e-7);
    CHECK_THROWS_AS(eq.g_prime(std::polar(1.0, 0.3)), Error);  // on the cut
}

TEST_CASE("g-prime equals the resolvent quadrature") {
    EquilibriumData eq(5 * kPi / 6, 2.0);
    QuadratureSpec s;
    s.abs_tol = s.rel_tol = 1e-12;
    s.singularity_splits = {-eq.beta(), eq.beta()};
    for (const cplx z : {cplx(2.0, 0.0), cplx(0.4, 0.3), cplx(-0.2, 0.8), cplx(1.1, -1.3),
                         cplx(0.2, -0.1), cplx(3.0, 2.0), cplx(-2.0, 0.5), cplx(0.05, 0.6),
                         cplx(1.5, 0.1), cplx(-0.7, -0.4)}) {
        const cplx omega = integrate_complex(
            [&](double th) { return eq.density_rho(th) / (z - std::polar(1.0, th)); },
            -eq.alpha(), eq.alpha(), s);
        CHECK(std::abs(omega - eq.g_prime(z)) < 1e-8);
    }
}

TEST_CASE("g function: asymptotics, origin, band boundary values") {
    EquilibriumData eq(kPi / 2, 5.0);
    CHECK(std::abs(eq.g_function(1e6) - std::log(1e6)) < 1e-5);
    CHECK(std::abs(eq.g_function(cplx(0.0, 0.0)) - cplx(0.0, kPi)) < 1e-9);
    for (double phi : {0.3, 0.7, 1.1}) {
        const cplx sum = eq.g_function(std::polar(1.0 + 1e-8, phi)) +
                         eq.g_function(std::polar(1.0 - 1e-8, phi));
        // eq33: g_+ + g_- = l + log z + i pi on the band (log z = i phi here)
        CHECK(std::abs(sum.real() - eq.ell()) < 1e-6);
        CHECK(sum.imag() == doctest::Approx(phi + kPi).epsilon(1e-6));
    }
    CHECK_THROWS_AS(eq.g_function(cplx(-3.0, 0.0)), Error);  // on (-inf, -1]
}

TEST_CASE("unconstrained density") {
    const Rational b(2);
    for (double x : {0.05, 0.17, 0.31, 0.44})
        CHECK(unconstrained_density(b, x) == doctest::Approx(unconstrained_density(b, -x)));
    // normalization with the inverse-square-root substitution x = 1/2 - t^2
    const double half = integrate_de(
        [&](double t) {
            double x = 0.5 - t * t;
            if (x >= 0.5) x = std::nextafter(0.5, 0.0);
            return 2.0 * t * unconstrained_density(b, x);
        },
        0.0, std::sqrt(0.5), 1e-11);
    CHECK(2.0 * half == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(unconstrained_density(b, 0.5 - 1e-8) > 1e3);
    CHECK_THROWS_AS(unconstrained_density(b, 0.5), Error);
}

TEST_CASE("critical density and the conjectured closed form") {
    CHECK(xi_critical(kPi / 2) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(xi_critical(2 * kPi / 3) - 3.0) < 1e-3);
    CHECK(std::abs(xi_critical(3 * kPi / 4) - 4.0) < 1e-3);
    CHECK(std::abs(xi_critical(5 * kPi / 6) - 6.0) < 1e-3);
    CHECK_THROWS_AS(xi_critical(kPi / 3), Error);
}

TEST_CASE("tilde wrappers") {
    const Rational b(6, 5);
    const double bb = b.value();
    for (double xt : {1.5, 2.0, 4.0}) {
        const double direct = bb * band_edge(kPi / bb, bb * xt) / kTwoPi;
        CHECK(beta_tilde(b, xt) == doctest::Approx(direct).epsilon(1e-12));
    }
    const double xt = 2.0;
    const double bt = beta_tilde(b, xt);
    for (int i = 0; i < 20; ++i) {
        const double x = bt + (0.5 - bt - 1e-3) * i / 19.0;
        const double slope = (L_tilde(b, xt, x + 5e-4) - L_tilde(b, xt, x)) / 5e-4;
        CHECK(slope > 0.0);
    }
    double prev = 1e9;
    for (double x : {1.5, 2.0, 3.0, 5.0}) {
        const double v = L_tilde(b, x, 0.5);
        CHECK(v < prev);  // endpoint value decreasing in xi-tilde
        prev = v;
    }
    // sign structure across the critical sampling density (= 5 for b = 6/5)
    CHECK(L_tilde(b, 2.0, 0.5) > 0.0);
    CHECK(L_tilde(b, 2.0, 0.498) > 0.0);
    CHECK(L_tilde(b, 2.0, 0.0) < 0.0);
    for (double x : {0.0, 0.2, 0.4, 0.49}) CHECK(L_tilde(b, 6.0, x) < 0.0);
}

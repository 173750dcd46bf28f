#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include <cmath>
#include <vector>

#include "superkg/special.hpp"

using namespace skg::special;

namespace {

// ---- Independent oracles ----------------------------------------------------

// Plain power-series J_k, truncated when terms drop below 1e-18 of the
// accumulator. Independent of the library path (no branch switching, no
// rational approximations); adequate for |x| <= ~10.
double jk_series(int k, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    for (int i = 1; i <= k; ++i) term *= 0.5 * x / i;  // (x/2)^k / k!
    double acc = term;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (double(m) * double(m + k));
        acc += term;
        if (std::abs(term) < 1e-18 * (std::abs(acc) + 1e-30)) break;
    }
    return acc;
}

// Integral-representation oracle, J0(x) = (1/pi) int_0^pi cos(x sin s) ds,
// J1(x) = (1/pi) int_0^pi cos(s - x sin s) ds; panel count scales with the
// oscillation rate so the rule stays spectrally convergent out to x = 500.
double j_integral_oracle(int order_k, double x) {
    const int panels = 16 + int(std::ceil(std::abs(x) / 2.0));
    const QuadratureRule rule = gauss_legendre_panels(0.0, pi, panels, 16);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double s = rule.nodes[i];
        acc += rule.weights[i] * std::cos(order_k * s - x * std::sin(s));
    }
    return acc / pi;
}

// Exact big-integer ln binom(n, j) through GMP.
double log_binomial_exact(unsigned n, unsigned j) {
    mpz_t b;
    mpz_init(b);
    mpz_bin_uiui(b, n, j);
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, b);
    mpz_clear(b);
    return std::log(mant) + double(exp2) * 0.6931471805599453094;
}

}  // namespace

TEST_CASE("bessel_j0 basic values") {
    CHECK(bessel_j0(0.0) == 1.0);

    // First zero refined by Newton on the series oracle (J0' = -J1).
    double root = 2.404825557695773;
    for (int it = 0; it < 8; ++it) root += jk_series(0, root) / jk_series(1, root);
    CHECK(std::abs(root - 2.404825557695773) < 1e-12);
    CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
}

TEST_CASE("bessel_j0 is even") {
    for (double x : {0.3, 1.7, 6.2, 11.5, 42.0})
        CHECK(bessel_j0(-x) == bessel_j0(x));
}

TEST_CASE("bessel against the integral oracle across the whole range") {
    const std::vector<double> xs = {0.1,  0.5,  1.0, 2.404825557695773,
                                    3.0,  5.2,  7.9, 8.0,
                                    8.1,  13.4, 37.5, 120.3,
                                    256.0, 499.5, 500.0};
    for (double x : xs) {
        CHECK(std::abs(bessel_j0(x) - j_integral_oracle(0, x)) < 1e-12);
        CHECK(std::abs(bessel_j1(x) - j_integral_oracle(1, x)) < 1e-12);
    }
}

TEST_CASE("bessel_j1 odd, small-argument ratio") {
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j1(-2.3) == -bessel_j1(2.3));

    const double x = 1e-8;
    CHECK(std::abs(bessel_j1(x) / x - 0.5) < 1e-10);
    CHECK(std::abs(bessel_j1_over_x(x) - 0.5) < 1e-10);
    CHECK(bessel_j1_over_x(0.0) == 0.5);
    // consistent with the direct quotient away from zero
    CHECK(std::abs(bessel_j1_over_x(3.7) - bessel_j1(3.7) / 3.7) < 1e-15);
}

TEST_CASE("dJ0/dx = -J1 by central differences") {
    const double h = 1e-5;
    for (double x : {0.5, 1.0, 3.0}) {
        const double der = (bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h);
        CHECK(std::abs(der + bessel_j1(x)) < 1e-9);  // O(h^2) stencil error
    }
}

TEST_CASE("bessel sum rule J0^2 + 2 sum J_k^2 = 1") {
    // series-computed J_k oracle; truncated once terms drop below 1e-14
    for (double x : {0.5, 2.0}) {
        double acc = jk_series(0, x) * jk_series(0, x);
        for (int k = 1; k < 60; ++k) {
            const double jk = jk_series(k, x);
            acc += 2.0 * jk * jk;
            if (jk * jk < 1e-14) break;
        }
        CHECK(std::abs(acc - 1.0) < 1e-12);
        CHECK(std::abs(bessel_j0(x) - jk_series(0, x)) < 1e-13);
    }
}

TEST_CASE("hermite_fn base cases and bound") {
    CHECK(hermite_fn(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-14));
    CHECK(hermite_fn(1, 0.0) == 0.0);
    CHECK_THROWS_AS(hermite_fn(201, 0.3), std::domain_error);
    CHECK_THROWS_AS(hermite_fn(-1, 0.3), std::domain_error);
    CHECK_NOTHROW(hermite_fn(200, 0.3));
}

TEST_CASE("hermite_fn orthonormality under the 64-point rule") {
    const QuadratureRule rule = gauss_hermite(64);
    for (int j = 0; j <= 10; ++j) {
        for (int k = j; k <= 10; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double x = rule.nodes[i];
                // weight-compensated: psi_j psi_k e^{x^2} is polynomial
                const double comp = std::exp(0.5 * x * x);
                acc += rule.weights[i] * (hermite_fn(j, x) * comp) * (hermite_fn(k, x) * comp);
            }
            CHECK(std::abs(acc - (j == k ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("hermite_fn satisfies its second-order ODE") {
    const double h = 1e-3;
    for (int k : {0, 1, 4, 8}) {
        for (double x : {-1.3, 0.2, 2.1}) {
            const double dd =
                (hermite_fn(k, x + h) - 2.0 * hermite_fn(k, x) + hermite_fn(k, x - h)) /
                (h * h);
            const double res = dd + (2.0 * k + 1.0 - x * x) * hermite_fn(k, x);
            CHECK(std::abs(res) < 1e-4);
        }
    }
}

TEST_CASE("gauss_hermite small rules are exact") {
    const QuadratureRule r1 = gauss_hermite(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1.nodes[0] == 0.0);
    CHECK(r1.weights[0] == doctest::Approx(sqrt_pi).epsilon(1e-15));

    const QuadratureRule r2 = gauss_hermite(2);
    REQUIRE(r2.size() == 2);
    CHECK(r2.nodes[0] == doctest::Approx(-0.7071067811865476).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(0.7071067811865476).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-14));
    // exactness on x^0..x^3: moments sqrt_pi, 0, sqrt_pi/2, 0
    double m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        const double x = r2.nodes[i], w = r2.weights[i];
        m0 += w;
        m1 += w * x;
        m2 += w * x * x;
        m3 += w * x * x * x;
    }
    CHECK(std::abs(m0 - sqrt_pi) < 1e-14);
    CHECK(std::abs(m1) < 1e-14);
    CHECK(std::abs(m2 - 0.5 * sqrt_pi) < 1e-14);
    CHECK(std::abs(m3) < 1e-14);
}

TEST_CASE("gauss_hermite invariants across sizes") {
    for (int n : {2, 3, 8, 33, 64, 128, 256}) {
        const QuadratureRule rule = gauss_hermite(n);
        REQUIRE(rule.size() == std::size_t(n));
        CHECK(std::abs(rule.weight_sum() - sqrt_pi) < 1e-12);
        for (std::size_t i = 1; i < rule.size(); ++i)
            CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        for (double w : rule.weights) CHECK(w > 0.0);

        if (n >= 2) {
            double m2 = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i)
                m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
            CHECK(std::abs(m2 - 0.5 * sqrt_pi) < 1e-12);
        }
    }
    CHECK_THROWS_AS(gauss_hermite(0), std::domain_error);
    CHECK_THROWS_AS(gauss_hermite(257), std::domain_error);
}

TEST_CASE("gauss_hermite integrates monomials against the Gaussian weight") {
    const int n = 16;
    const QuadratureRule rule = gauss_hermite(n);
    // exact moments: int x^k e^{-x^2} = Gamma((k+1)/2) for even k, 0 for odd.
    // Mirrored nodes are paired so the odd-moment cancellation is tested as
    // the symmetry property it is.
    double moment = sqrt_pi;
    for (int k = 0; k <= 2 * n - 2; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n / 2; ++i)
            acc += rule.weights[i] *
                   (std::pow(rule.nodes[i], k) + std::pow(rule.nodes[n - 1 - i], k));
        if (k % 2 == 1) {
            CHECK(std::abs(acc) < 1e-12);
        } else {
            if (k > 0) moment *= 0.5 * (k - 1);  // Gamma recursion
            CHECK(std::abs(acc - moment) < 1e-12 * std::max(1.0, moment));
        }
    }
}

TEST_CASE("gauss_legendre_panels basics") {
    const QuadratureRule unit = gauss_legendre_panels(0.0, 1.0, 4, 6);
    CHECK(std::abs(unit.weight_sum() - 1.0) < 1e-14);

    const QuadratureRule sym = gauss_legendre_panels(-1.0, 1.0, 1, 8);
    CHECK(std::abs(sym.weight_sum() - 2.0) < 1e-12);
    double x2 = 0.0;
    for (std::size_t i = 0; i < sym.size(); ++i)
        x2 += sym.weights[i] * sym.nodes[i] * sym.nodes[i];
    CHECK(std::abs(x2 - 2.0 / 3.0) < 1e-14);

    CHECK_THROWS_AS(gauss_legendre_panels(1.0, 0.0, 1, 4), std::domain_error);
    CHECK(gauss_legendre_panels(2.0, 2.0, 3, 4).size() == 0);
}

TEST_CASE("gauss_legendre_panels self-convergence on an oscillatory integrand") {
    const double zero = 2.404825557695773;
    const auto integrate_j0 = [&](int panels) {
        const QuadratureRule rule = gauss_legendre_panels(0.0, zero, panels, 10);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            acc += rule.weights[i] * bessel_j0(rule.nodes[i]);
        return acc;
    };
    CHECK(std::abs(integrate_j0(4) - integrate_j0(40)) < 1e-10);
}

TEST_CASE("gauss_legendre_panels exactness per panel degree") {
    // degree 2*order-1 polynomial integrated exactly
    const QuadratureRule rule = gauss_legendre_panels(-0.5, 2.0, 3, 5);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 9);
    const double exact = (std::pow(2.0, 10) - std::pow(-0.5, 10)) / 10.0;
    CHECK(std::abs(acc - exact) < 1e-12 * std::abs(exact));
}

TEST_CASE("log_binomial") {
    CHECK(log_binomial(5, 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_binomial(4, 5), std::domain_error);
    CHECK_THROWS_AS(log_binomial(4, -1), std::domain_error);

    const double exact = log_binomial_exact(200, 100);
    CHECK(std::abs(log_binomial(200, 100) - exact) < 1e-12 * exact);
    for (unsigned n : {7u, 30u, 120u})
        for (unsigned j : {0u, 1u, 3u, 7u})
            CHECK(std::abs(log_binomial(int(n), int(j)) - log_binomial_exact(n, j)) <
                  1e-12 * std::max(1.0, log_binomial_exact(n, j)));
}

TEST_CASE("PanelConfig scales panel count with interval length") {
    const PanelConfig cfg;  // 16 per unit, order 10
    CHECK(cfg.panels_for(0.0, 1.0) == 16);
    CHECK(cfg.panels_for(0.0, 2.5) == 40);
    CHECK(cfg.panels_for(0.0, 0.01) == 1);
    CHECK(cfg.rule(0.0, 1.0).size() == 160);
}

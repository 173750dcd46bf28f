#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <unordered_map>

#include "superkg/bargmann.hpp"
#include "superkg/kg_spectral.hpp"
#include "superkg/special.hpp"
#include "superkg/superosc.hpp"

using namespace skg;
using bargmann::cplx;

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

special::QuadratureRule gh(int n) { return special::gauss_hermite(n); }

}  // namespace

TEST_CASE("reproducing kernel") {
    CHECK(bargmann::fock_kernel({0.7, -0.3}, {0.0, 0.0}) == cplx{1.0, 0.0});
    CHECK(std::abs(bargmann::fock_kernel({1.0, 0.0}, {1.0, 0.0}) -
                   cplx{std::exp(1.0), 0.0}) < 1e-14);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> pick(-1.5, 1.5);
    for (int rep = 0; rep < 30; ++rep) {
        const cplx z{pick(rng), pick(rng)}, w{pick(rng), pick(rng)};
        CHECK(std::abs(bargmann::fock_kernel(z, w) -
                       std::conj(bargmann::fock_kernel(w, z))) < 1e-13);
    }
}

TEST_CASE("normalized kernel") {
    const cplx w{0.8, -0.6};
    CHECK(std::abs(bargmann::normalized_kernel({0.0, 0.0}, w) -
                   cplx{std::exp(-0.5 * std::norm(w)), 0.0}) < 1e-15);
    CHECK(bargmann::normalized_kernel({0.4, 0.2}, {0.0, 0.0}) == cplx{1.0, 0.0});

    // unit norm in the Gaussian-weighted space, 64x64 tensor quadrature
    const special::QuadratureRule rule = gh(64);
    for (const cplx ww : {cplx{0.5, 0.0}, cplx{-1.0, 1.2}, cplx{0.0, 2.0}}) {
        const auto kw = [ww](cplx z) { return bargmann::normalized_kernel(z, ww); };
        const cplx norm2 = bargmann::fock_inner(kw, kw, rule, rule);
        CHECK(std::abs(norm2 - cplx{1.0, 0.0}) < 1e-8);
    }
}

TEST_CASE("gaussian measure is a probability measure") {
    const special::QuadratureRule rule = gh(32);
    const auto one = [](cplx) { return cplx{1.0, 0.0}; };
    CHECK(std::abs(bargmann::fock_inner(one, one, rule, rule) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("monomials are orthogonal with norm k!") {
    const special::QuadratureRule rule = gh(48);
    for (int k = 0; k <= 6; ++k) {
        for (int l = 0; l <= 6; ++l) {
            const auto zk = [k](cplx z) { return std::pow(z, k); };
            const auto zl = [l](cplx z) { return std::pow(z, l); };
            const cplx inner = bargmann::fock_inner(zk, zl, rule, rule);
            const double expect = k == l ? factorial(k) : 0.0;
            CHECK(std::abs(inner - cplx{expect, 0.0}) < 1e-7);
        }
    }
}

TEST_CASE("kernel reproduces point evaluations") {
    const special::QuadratureRule rule = gh(48);
    const cplx w{0.6, -0.4};
    const auto kw = [w](cplx z) { return bargmann::fock_kernel(z, w); };
    for (int k : {0, 1, 2}) {
        const auto f = [k](cplx z) { return std::pow(z, k); };
        // (1/pi) int conj(K(z,w)) f(z) e^{-|z|^2} = f(w)
        const cplx reproduced = bargmann::fock_inner(f, kw, rule, rule);
        CHECK(std::abs(reproduced - std::pow(w, k)) < 1e-8);
    }
}

TEST_CASE("position-space kernel") {
    CHECK(std::abs(bargmann::sb_kernel({0.0, 0.0}, 0.0) -
                   cplx{special::quarter_root_pi_inv, 0.0}) < 1e-15);

    // series expansion over the Hermite basis converges to the closed form
    for (const cplx z : {cplx{0.3, 0.2}, cplx{-0.8, 0.5}, cplx{0.0, -1.0}}) {
        for (double x : {-2.0, -0.4, 0.7, 2.0}) {
            cplx acc{0.0, 0.0};
            cplx zbar_pow{1.0, 0.0};
            const cplx zbar = std::conj(z);
            for (int k = 0; k <= 40; ++k) {
                acc += special::hermite_fn(k, x) * zbar_pow / std::sqrt(factorial(k));
                zbar_pow *= zbar;
            }
            CHECK(std::abs(acc - bargmann::sb_kernel(z, x)) < 1e-10);
        }
    }
}

TEST_CASE("kernel factorization through the position inner product") {
    // int A_w(x) conj(A_z(x)) dx = e^{z conj(w)}; fold e^{-x^2} out of the
    // kernels to use the Gaussian rule
    const special::QuadratureRule rule = gh(96);
    for (const cplx z : {cplx{0.5, 0.3}, cplx{-1.2, 0.8}}) {
        for (const cplx w : {cplx{0.25, -0.7}, cplx{1.1, 0.4}}) {
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double x = rule.nodes[i];
                const cplx aw = bargmann::sb_kernel(w, x);
                const cplx az = bargmann::sb_kernel(z, x);
                acc += rule.weights[i] * std::exp(x * x) * aw * std::conj(az);
            }
            CHECK(std::abs(acc - bargmann::fock_kernel(z, w)) < 1e-8);
        }
    }
}

TEST_CASE("forward transform maps the Hermite basis to monomials") {
    const special::QuadratureRule rule = gh(96);

    const auto psi0 = [](double x) { return cplx{special::hermite_fn(0, x), 0.0}; };
    for (const cplx z : {cplx{0.0, 0.0}, cplx{1.3, -0.9}, cplx{-2.0, 0.0}, cplx{0.0, 2.0}})
        CHECK(std::abs(bargmann::sb_forward(psi0, z, rule) - cplx{1.0, 0.0}) < 1e-9);

    const auto psi3 = [](double x) { return cplx{special::hermite_fn(3, x), 0.0}; };
    CHECK(std::abs(bargmann::sb_forward(psi3, {1.0, 0.0}, rule) -
                   cplx{1.0 / std::sqrt(6.0), 0.0}) < 1e-8);

    for (int k = 0; k <= 8; ++k) {
        const auto psik = [k](double x) { return cplx{special::hermite_fn(k, x), 0.0}; };
        for (const cplx z : {cplx{0.4, 0.2}, cplx{-1.0, 1.0}, cplx{1.5, 0.0}}) {
            const cplx expect = std::pow(z, k) / std::sqrt(factorial(k));
            CHECK(std::abs(bargmann::sb_forward(psik, z, rule) - expect) < 1e-7);
        }
    }
}

TEST_CASE("transformed evolution: closed form vs quadrature") {
    const int n = 6;
    const double a = 1.5, m = 3.0, t = 0.4;
    const special::QuadratureRule rule = gh(96);
    const bargmann::RealFn phi = bargmann::phi_n(n, a, m, t);
    for (const cplx z : {cplx{0.5, 0.3}, cplx{-0.7, -0.2}, cplx{0.0, 1.0}}) {
        const cplx via_quad = bargmann::sb_forward(phi, z, rule);
        const cplx closed = bargmann::xi_closed_form(n, a, m, t, z);
        CHECK(std::abs(via_quad - closed) < 1e-7);
    }
}

TEST_CASE("transformed evolution at t = 0") {
    // theta factors collapse to one; the t=0 formula is the same sum without them
    const int n = 5;
    const double a = 2.0;
    const superosc::CoefficientSet set = superosc::coefficients({n, a});
    for (const cplx z : {cplx{0.4, -0.6}, cplx{-1.1, 0.3}}) {
        cplx direct{0.0, 0.0};
        for (int j = 0; j <= n; ++j) {
            const double lam = set.lambda(j);
            direct += set.values[j] * std::exp(cplx{0.0, 1.0} * (z * lam / std::sqrt(2.0)) -
                                               cplx{lam * lam / 4.0, 0.0});
        }
        direct *= special::quarter_root_pi;
        CHECK(std::abs(bargmann::xi_closed_form(n, a, 3.0, 0.0, z) - direct) < 1e-12);
        // mass drops out at t = 0
        CHECK(std::abs(bargmann::xi_closed_form(n, a, 3.0, 0.0, z) -
                       bargmann::xi_closed_form(n, a, 0.0, 0.0, z)) == 0.0);
    }

    // hand value at z = 0, n = 1, a = 2: pi^{1/4} e^{-1/4}
    const cplx hand = bargmann::xi_closed_form(1, 2.0, 3.0, 0.0, {0.0, 0.0});
    CHECK(std::abs(hand - cplx{special::quarter_root_pi * std::exp(-0.25), 0.0}) < 1e-14);
}

TEST_CASE("time derivative equals sqrt2 z-derivative at t = 0") {
    const int n = 6;
    const double a = 1.5, m = 3.0, h = 1e-5;
    for (const cplx z : {cplx{0.3, 0.4}, cplx{-0.9, 0.1}}) {
        const cplx dt = (bargmann::xi_closed_form(n, a, m, h, z) -
                         bargmann::xi_closed_form(n, a, m, -h, z)) /
                        (2.0 * h);
        const cplx dz_fd = (bargmann::xi_closed_form(n, a, m, 0.0, z + cplx{h, 0.0}) -
                            bargmann::xi_closed_form(n, a, m, 0.0, z - cplx{h, 0.0})) /
                           (2.0 * h);
        CHECK(std::abs(dt - std::sqrt(2.0) * dz_fd) < 1e-7);
        // the analytic z-derivative matches the finite difference
        CHECK(std::abs(bargmann::xi_dz_closed_form(n, a, m, 0.0, z) - dz_fd) < 1e-8);
    }
}

TEST_CASE("xi is entire: Cauchy-Riemann residual vanishes") {
    const bargmann::XiFunction xi{6, 1.5, 3.0, 0.4};
    const double h = 1e-4;
    for (const cplx z : {cplx{0.2, 0.5}, cplx{-0.6, -0.3}, cplx{1.0, 0.0}}) {
        const cplx dre = (xi(z + cplx{h, 0.0}) - xi(z - cplx{h, 0.0})) / (2.0 * h);
        const cplx dim = (xi(z + cplx{0.0, h}) - xi(z - cplx{0.0, h})) / (2.0 * h);
        const cplx dbar = 0.5 * (dre + cplx{0.0, 1.0} * dim);
        CHECK(std::abs(dbar) < 1e-6);
    }
}

TEST_CASE("inverse transform recovers the evolution") {
    const int n = 6;
    const double a = 1.5, m = 3.0, t = 0.3;
    const special::QuadratureRule rule = gh(96);
    const bargmann::XiFunction xi{n, a, m, t};
    for (double x : {-1.2, 0.0, 0.4, 1.5}) {
        const cplx inverted = bargmann::sb_inverse(xi, x, rule, rule);
        const cplx direct = kg_spectral::evolve_homogeneous(n, a, m, x, t);
        CHECK(std::abs(inverted - direct) < 1e-6);
    }
}

TEST_CASE("integral representations of the sequence and its derivative") {
    const int n = 6;
    const double a = 1.5;
    const special::QuadratureRule rule = gh(96);
    const bargmann::XiFunction xi0{n, a, 0.0, 0.0};

    for (double x : {-1.5, -0.4, 0.4, 1.5}) {
        CHECK(std::abs(bargmann::sb_inverse(xi0, x, rule, rule) -
                       superosc::eval_fn_sum({n, a}, x)) < 1e-6);
        CHECK(std::abs(bargmann::fn_derivative_integral_rep(n, a, x, rule, rule) -
                       superosc::eval_fn_derivative({n, a}, x)) < 1e-6);
    }

    // hand values at x = 0: derivative is i a
    CHECK(std::abs(bargmann::fn_derivative_integral_rep(2, 2.0, 0.0, rule, rule) -
                   cplx{0.0, 2.0}) < 1e-6);
    CHECK(std::abs(bargmann::fn_derivative_integral_rep(1, 2.0, 0.0, rule, rule) -
                   cplx{0.0, 2.0}) < 1e-6);
}

TEST_CASE("inverse transform of the vacuum state is constant") {
    const special::QuadratureRule rule = gh(64);
    const auto one = [](cplx) { return cplx{1.0, 0.0}; };
    for (double x : {-1.0, 0.0, 2.0})
        CHECK(std::abs(bargmann::sb_inverse(one, x, rule, rule) -
                       cplx{special::quarter_root_pi_inv, 0.0}) < 1e-9);
}

TEST_CASE("round trip through the transform pair") {
    const special::QuadratureRule rule = gh(96);

    // psi_0, psi_1, and the damped sequence at t = 0; the inverse returns the
    // Gaussian-stripped function e^{x^2/2} psi(x). The forward transform only
    // ever sees psi at the fixed rule nodes, so those values are precomputed
    // instead of re-evaluated for each of the 96x96 outer points.
    const auto round = [&](const bargmann::RealFn& psi, double x) {
        std::unordered_map<double, cplx> at_node;
        at_node.reserve(rule.size());
        for (double s : rule.nodes) at_node.emplace(s, psi(s));
        const bargmann::RealFn cached = [&at_node](double s) { return at_node.at(s); };
        const bargmann::FockFn fwd = [&](cplx z) {
            return bargmann::sb_forward(cached, z, rule);
        };
        return bargmann::sb_inverse(fwd, x, rule, rule);
    };

    for (double x : {-1.1, 0.2, 0.9}) {
        const auto psi0 = [](double s) { return cplx{special::hermite_fn(0, s), 0.0}; };
        CHECK(std::abs(round(psi0, x) -
                       std::exp(0.5 * x * x) * special::hermite_fn(0, x)) < 1e-6);

        const auto psi1 = [](double s) { return cplx{special::hermite_fn(1, s), 0.0}; };
        CHECK(std::abs(round(psi1, x) -
                       std::exp(0.5 * x * x) * special::hermite_fn(1, x)) < 1e-6);

        const bargmann::RealFn phi = bargmann::phi_n(6, 1.5, 3.0, 0.0);
        CHECK(std::abs(round(phi, x) - superosc::eval_fn_sum({6, 1.5}, x)) < 1e-6);
    }
}

TEST_CASE("checked variants flag unconverged quadrature") {
    // 8 nodes are far too few for this kernel; the pair must disagree
    const bargmann::RealFn phi = bargmann::phi_n(6, 1.5, 3.0, 0.4);
    CHECK_THROWS_AS(bargmann::sb_forward_checked(phi, {1.5, 1.5}, 4, 1e-12),
                    special::QuadratureError);
    // and converges cleanly at sane sizes
    CHECK_NOTHROW(bargmann::sb_forward_checked(phi, {0.5, 0.3}, 64, 1e-9));
    const bargmann::XiFunction xi{6, 1.5, 3.0, 0.4};
    CHECK_NOTHROW(bargmann::sb_inverse_checked(xi, 0.4, 64, 1e-8));
}

TEST_CASE("transforms reject non-Gaussian rules") {
    const special::QuadratureRule gl = special::gauss_legendre_panels(-1.0, 1.0, 4, 6);
    const auto psi = [](double x) { return cplx{std::exp(-x * x), 0.0}; };
    CHECK_THROWS_AS(bargmann::sb_forward(psi, {0.0, 0.0}, gl), std::invalid_argument);
}

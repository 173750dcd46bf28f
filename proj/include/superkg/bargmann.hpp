#pragma once

#include <complex>
#include <functional>

#include "superkg/special.hpp"

// Fock-space kernels, the Segal-Bargmann transform (closed form and
// quadrature), the transformed evolution xi_n, its inversion back to
// position space, and the resulting integral representations of F_n, F_n'.

namespace skg::bargmann {

using cplx = std::complex<double>;
using RealFn = std::function<cplx(double)>;
using FockFn = std::function<cplx(cplx)>;

// Reproducing kernel K(z,w) = e^{z conj(w)}.
cplx fock_kernel(cplx z, cplx w);

// Unit-norm kernel k_w(z) = e^{z conj(w) - |w|^2/2} (coherent state at w).
cplx normalized_kernel(cplx z, cplx w);

// A_z(x) = pi^(-1/4) e^{-(x^2 + conj(z)^2)/2 + sqrt(2) conj(z) x}
cplx sb_kernel(cplx z, double x);

// Forward transform  pi^(-1/4) int e^{-(x^2+z^2)/2 + sqrt(2) z x} psi(x) dx
// with the Gaussian folded into a gauss_hermite rule. The caller is
// responsible for psi decaying fast enough that the weighted evaluation
// converges (true for Gaussian-damped inputs such as phi_n below).
cplx sb_forward(const RealFn& psi, cplx z, const special::QuadratureRule& rule);

// Refinement pair (nodes, 2x nodes); throws QuadratureError on disagreement.
cplx sb_forward_checked(const RealFn& psi, cplx z, int nodes, double tol);

// Closed form of the transformed evolution:
//   xi_n(z,t) = pi^{1/4} sum_j C_j theta_{l_j,m}(t) e^{i z l_j/sqrt2 - l_j^2/4},
// l_j = 1 - 2j/n.
cplx xi_closed_form(int n, double a, double m, double t, cplx z);

// d/dz of the closed form (term-wise i l_j/sqrt2 factor, evaluated
// analytically).
cplx xi_dz_closed_form(int n, double a, double m, double t, cplx z);

// Evaluation object closing over (n, a, m, t); entire in z.
struct XiFunction {
    int n;
    double a;
    double m;
    double t;

    cplx operator()(cplx z) const { return xi_closed_form(n, a, m, t, z); }
    cplx dz(cplx z) const { return xi_dz_closed_form(n, a, m, t, z); }
};

// Gaussian-damped evolution slice x -> e^{-x^2/2} u_n(x,t); this damping is
// what makes the forward quadrature convergent.
RealFn phi_n(int n, double a, double m, double t);

// Inverse-transform evaluation with the position-space Gaussian already
// stripped:  pi^(-1/4) (1/pi) int e^{-conj(z)^2/2 + sqrt2 x conj(z)} xi(z)
// e^{-|z|^2} dA(z), by tensor gauss_hermite quadrature over (Re z, Im z).
// Requires xi of at most Gaussian-half growth.
cplx sb_inverse(const FockFn& xi, double x, const special::QuadratureRule& re_rule,
                const special::QuadratureRule& im_rule);

cplx sb_inverse_checked(const FockFn& xi, double x, int nodes, double tol);

// F_n'(x,a) recovered from the same double integral applied to
// sqrt2 d/dz xi_n(z,0).
cplx fn_derivative_integral_rep(int n, double a, double x,
                                const special::QuadratureRule& re_rule,
                                const special::QuadratureRule& im_rule);

// Fock inner product (1/pi) int conj(g) f e^{-|z|^2} dA by tensor quadrature;
// shared by the unit-norm, orthogonality and reproducing-property checks.
cplx fock_inner(const FockFn& f, const FockFn& g, const special::QuadratureRule& re_rule,
                const special::QuadratureRule& im_rule);

}  // namespace skg::bargmann

#include "superkg/bargmann.hpp"

#include <cmath>
#include <sstream>

#include "quad_real.hpp"
#include "superkg/kg_spectral.hpp"
#include "superkg/superosc.hpp"

namespace skg::bargmann {

namespace {

using detail::qcplx;
using detail::qreal;

cplx cexp(cplx v) { return std::exp(v); }

void check_pair(cplx coarse, cplx fine, double tol, const char* where) {
    if (std::abs(coarse - fine) > tol) {
        std::ostringstream msg;
        msg << where << ": refinement pair disagrees beyond " << tol << ": coarse=("
            << coarse.real() << "," << coarse.imag() << ") fine=(" << fine.real() << ","
            << fine.imag() << ")";
        throw special::QuadratureError(msg.str(), coarse, fine);
    }
}

// Closed form and its z-derivative share one accumulation; `derivative`
// multiplies each term by i lam/sqrt2.
cplx xi_sum(int n, double a, double m, double t, cplx z, bool derivative) {
    if (n < 1) throw std::domain_error("xi requires n >= 1");
    thread_local int gate_n = -1;
    thread_local double gate_a = 0.0;
    thread_local bool gate_ok = false;
    if (gate_n != n || gate_a != a) {
        gate_ok = superosc::coefficients({n, a}).materialized;
        gate_n = n;
        gate_a = a;
    }
    if (!gate_ok)
        throw std::overflow_error("coefficient magnitude exceeds the double range");

    const auto& c = detail::quad_coefficients_cached(n, a);
    const qreal inv_sqrt2 = qreal(1) / sqrtq(qreal(2));
    const qreal zp = z.real(), zq = z.imag();
    const qreal mq = m, tq = t;

    qcplx acc;
    for (int j = 0; j <= n; ++j) {
        const qreal lam = detail::quad_lambda(n, j);
        // e^{i z lam/sqrt2 - lam^2/4} with z = p + iq
        const qreal mag = expq(-zq * lam * inv_sqrt2 - lam * lam / 4);
        qcplx term = mag * detail::unit_phase(zp * lam * inv_sqrt2);
        term = term * detail::quad_theta(lam, mq, tq);
        if (derivative) {
            const qreal f = lam * inv_sqrt2;  // times i f
            term = qcplx{-f * term.im, f * term.re};
        }
        acc = acc + c[j] * term;
    }
    const qreal root4_pi = sqrtq(sqrtq(qreal(M_PIq)));
    acc = root4_pi * acc;
    return detail::to_double(acc);
}

}  // namespace

cplx fock_kernel(cplx z, cplx w) { return cexp(z * std::conj(w)); }

cplx normalized_kernel(cplx z, cplx w) {
    return cexp(z * std::conj(w) - 0.5 * std::norm(w));
}

cplx sb_kernel(cplx z, double x) {
    const cplx zc = std::conj(z);
    return special::quarter_root_pi_inv * cexp(-0.5 * (x * x + zc * zc) + std::sqrt(2.0) * zc * x);
}

cplx sb_forward(const RealFn& psi, cplx z, const special::QuadratureRule& rule) {
    if (rule.kind != special::RuleKind::gauss_hermite)
        throw std::invalid_argument("sb_forward expects a gauss_hermite rule");
    // Integrand with the Gaussian weight factored out:
    //   e^{x^2/2 - z^2/2 + sqrt2 z x} psi(x)
    const cplx half_z2 = 0.5 * z * z;
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        acc += rule.weights[i] *
               cexp(cplx{0.5 * x * x, 0.0} - half_z2 + std::sqrt(2.0) * z * x) * psi(x);
    }
    return special::quarter_root_pi_inv * acc;
}

cplx sb_forward_checked(const RealFn& psi, cplx z, int nodes, double tol) {
    const cplx coarse = sb_forward(psi, z, special::gauss_hermite(nodes));
    const cplx fine = sb_forward(psi, z, special::gauss_hermite(2 * nodes));
    check_pair(coarse, fine, tol, "sb_forward");
    return fine;
}

cplx xi_closed_form(int n, double a, double m, double t, cplx z) {
    return xi_sum(n, a, m, t, z, false);
}

cplx xi_dz_closed_form(int n, double a, double m, double t, cplx z) {
    return xi_sum(n, a, m, t, z, true);
}

RealFn phi_n(int n, double a, double m, double t) {
    return [n, a, m, t](double x) {
        return std::exp(-0.5 * x * x) * kg_spectral::evolve_homogeneous(n, a, m, x, t);
    };
}

cplx sb_inverse(const FockFn& xi, double x, const special::QuadratureRule& re_rule,
                const special::QuadratureRule& im_rule) {
    if (re_rule.kind != special::RuleKind::gauss_hermite ||
        im_rule.kind != special::RuleKind::gauss_hermite)
        throw std::invalid_argument("sb_inverse expects gauss_hermite rules");

    // (1/pi) sum_{i,k} w_i w_k e^{-conj(z)^2/2 + sqrt2 x conj(z)} xi(z),
    // z = p_i + i q_k; the e^{-|z|^2} factor lives in the tensor weights.
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < re_rule.size(); ++i) {
        const double p = re_rule.nodes[i];
        cplx row{0.0, 0.0};
        for (std::size_t k = 0; k < im_rule.size(); ++k) {
            const double q = im_rule.nodes[k];
            const cplx z{p, q};
            const cplx zc = std::conj(z);
            row += im_rule.weights[k] * cexp(-0.5 * zc * zc + std::sqrt(2.0) * x * zc) * xi(z);
        }
        acc += re_rule.weights[i] * row;
    }
    return special::quarter_root_pi_inv * acc / special::pi;
}

cplx sb_inverse_checked(const FockFn& xi, double x, int nodes, double tol) {
    const special::QuadratureRule coarse_rule = special::gauss_hermite(nodes);
    const special::QuadratureRule fine_rule = special::gauss_hermite(2 * nodes);
    const cplx coarse = sb_inverse(xi, x, coarse_rule, coarse_rule);
    const cplx fine = sb_inverse(xi, x, fine_rule, fine_rule);
    check_pair(coarse, fine, tol, "sb_inverse");
    return fine;
}

cplx fn_derivative_integral_rep(int n, double a, double x,
                                const special::QuadratureRule& re_rule,
                                const special::QuadratureRule& im_rule) {
    const FockFn dxi = [n, a](cplx z) { return xi_dz_closed_form(n, a, 0.0, 0.0, z); };
    return std::sqrt(2.0) * sb_inverse(dxi, x, re_rule, im_rule);
}

cplx fock_inner(const FockFn& f, const FockFn& g, const special::QuadratureRule& re_rule,
                const special::QuadratureRule& im_rule) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < re_rule.size(); ++i) {
        const double p = re_rule.nodes[i];
        cplx row{0.0, 0.0};
        for (std::size_t k = 0; k < im_rule.size(); ++k) {
            const cplx z{p, im_rule.nodes[k]};
            row += im_rule.weights[k] * f(z) * std::conj(g(z));
        }
        acc += re_rule.weights[i] * row;
    }
    return acc / special::pi;
}

}  // namespace skg::bargmann

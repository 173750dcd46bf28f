#include "superkg/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superkg/kg_spectral.hpp"

namespace skg::stochastic {

double r_kernel(const CovKernelParams& params, double t, const special::PanelConfig& quad) {
    // Even in t: the defining integrand depends on t only through cos(w t).
    return kg_spectral::particular_dirac_space(params.m, params.x, std::abs(t), quad);
}

double r_kernel_fourier_check(const CovKernelParams& params, double t, double omega_max,
                              int order, double tol) {
    if (omega_max < 10.0)
        throw std::domain_error("r_kernel_fourier_check: omega_max must be >= 10");

    // |integrand| <= 2/w^2 beyond Omega, so the discarded tail is bounded by
    // (1/pi) * 2/Omega.
    const double tail_bound = 2.0 / (special::pi * omega_max);
    if (tail_bound > tol)
        throw std::domain_error(
            "r_kernel_fourier_check: truncation tail bound exceeds the requested tolerance");

    const double m = params.m;
    const double x = params.x;
    const double max_len =
        special::pi / (2.0 * std::max({std::abs(t), std::abs(x), 1.0}));
    const int panels = int(std::ceil(omega_max / max_len));
    const special::QuadratureRule rule =
        special::gauss_legendre_panels(0.0, omega_max, panels, order);

    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double w = rule.nodes[i];
        const double wm = std::hypot(m, w);
        const double s = std::sin(0.5 * wm * t);
        // 1 - cos(wm t) = 2 sin^2(wm t / 2), stable near wm t = 0
        acc += rule.weights[i] * std::cos(x * w) * 2.0 * s * s / (m * m + w * w);
    }
    return acc / special::pi;
}

double cov_kernel(const CovKernelParams& params, double s, double t,
                  const special::PanelConfig& quad) {
    if (s < 0.0 || t < 0.0) throw std::domain_error("cov_kernel: requires s, t >= 0");
    // r is real, so the conjugate of r(t) is r(t) itself; r(s-t) uses the
    // even extension.
    return r_kernel(params, s, quad) + r_kernel(params, t, quad) -
           r_kernel(params, s - t, quad);
}

}  // namespace skg::stochastic

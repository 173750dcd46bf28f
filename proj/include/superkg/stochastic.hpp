#pragma once

#include "superkg/special.hpp"

// The particular-solution kernel r_{m,x}, its oscillatory-Fourier cross-check
// form, and the covariance extension K_{m,x}(s,t) = r(s) + r(t) - r(s-t) that
// reduces to the Brownian min(s,t) at m = x = 0.

namespace skg::stochastic {

struct CovKernelParams {
    double m = 0.0;
    double x = 0.0;
};

// r_{m,x}(t): the causal finite-interval Bessel form, extended evenly to
// t < 0 (the defining integrand depends on t only through cos(w t)).
double r_kernel(const CovKernelParams& params, double t,
                const special::PanelConfig& quad = {});

// Truncated oscillatory-Fourier evaluation
//   (1/pi) int_0^Omega cos(x w) (1 - cos(sqrt(m^2+w^2) t)) / (m^2+w^2) dw
// with panel length <= pi/(2 max(|t|,|x|,1)) and documented tail bound
// 2/(pi Omega). Cross-check only; throws std::domain_error when the tail
// bound exceeds the requested tolerance.
double r_kernel_fourier_check(const CovKernelParams& params, double t, double omega_max,
                              int order = 10, double tol = 1e-4);

// K(s,t) = r(s) + r(t) - r(s-t) for s,t >= 0; r is real so the conjugation
// in the defining formula is the identity.
double cov_kernel(const CovKernelParams& params, double s, double t,
                  const special::PanelConfig& quad = {});

}  // namespace skg::stochastic

#pragma once

#include <complex>
#include <functional>
#include <variant>

#include "superkg/special.hpp"

// Independent general initial-value solver for (d_tt - d_xx + m^2) u = L by
// quadrature of the causal Bessel-kernel representation. Serves as the
// cross-oracle for the closed forms in kg_spectral.

namespace skg::kg_green {

using cplx = std::complex<double>;
using InitialFn = std::function<cplx(double)>;
using SourceFn = std::function<cplx(double, double)>;

enum class SymbolicSource { zero, dirac_space, dirac_spacetime };

struct IvpSpec {
    double m = 0.0;
    InitialFn f;  // u(.,0); must be defined on [x-t, x+t] of every queried point
    InitialFn g;  // u_t(.,0)
    std::variant<SymbolicSource, SourceFn> source = SymbolicSource::zero;
    special::PanelConfig quad{};  // 16 panels x order 10 per unit length
    double refine_tol = 1e-8;     // doubled-panel disagreement gate
};

// u(x,t) = (f(x-t)+f(x+t))/2
//        + (1/2) int J0[m R(xi)] g(xi) dxi
//        - (m^2 t/2) int (J1[m R]/(m R)) f(xi) dxi          R = sqrt(t^2-(x-xi)^2)
//        + source contribution (symbolic sources collapsed analytically,
//          callback sources by nested quadrature).
// Evaluates a refinement pair (panels, 2x panels) and throws QuadratureError
// with both values if they disagree beyond refine_tol; returns the fine value.
cplx green_solve(const IvpSpec& spec, double x, double t);

// Collapsed source integrals: the space-time point source gives
// (1/2) H(t-|x|) J0(m sqrt(t^2-x^2)); the static point source the causal
// finite-interval J0 integral.
double green_source_term(double m, SymbolicSource source, double x, double t,
                         const special::PanelConfig& quad = {});

}  // namespace skg::kg_green

#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "superkg/special.hpp"

// Closed-form Klein-Gordon evolutions of superoscillating initial data for
// every supported initial-data/source combination, their n -> infinity
// limits, and the truncated infinite-order-operator evaluation.

namespace skg::kg_spectral {

using cplx = std::complex<double>;

// Dispersion bracket theta_{omega,m}(t) = cos(w t) + i (omega/w) sin(w t),
// w = sqrt(m^2 + omega^2); equals 1 at w = 0 (limit value).
cplx theta(double omega, double m, double t);

struct ThetaKernel {
    double omega;
    double m;
    cplx operator()(double t) const { return theta(omega, m, t); }
};

// sum_j C_j(n,a) e^{ix(1-2j/n)} theta_{1-2j/n, m}(t)
cplx evolve_homogeneous(int n, double a, double m, double x, double t);

// e^{iax} theta_{a,m}(t)
cplx evolve_homogeneous_limit(double a, double m, double x, double t);

// Same sum with the cos / sin(w t)/w kernels replaced by their Taylor partial
// sums truncated at `order` terms each, applied at eigenvalue level.
cplx evolve_operator_truncated(int n, double a, double m, double x, double t, int order);

// Particular solution for the static point source: the causal finite-interval
// form  (1/2) int_{|x|}^{t} J0(m sqrt(s^2 - x^2)) ds  for t > |x|, else 0.
double particular_dirac_space(double m, double x, double t,
                              const special::PanelConfig& quad = {});

cplx evolve_dirac_space(int n, double a, double m, double x, double t,
                        const special::PanelConfig& quad = {});

// Homogeneous solution plus (1/2) H(t-|x|) J0(m sqrt(t^2-x^2)); the Heaviside
// convention is H(0) = 1 (light-cone boundary included).
cplx evolve_dirac_spacetime(int n, double a, double m, double x, double t);

// Second initial-data family: position data F_n(.,a), velocity data F_n(.,b).
cplx evolve_problem2(int n, double a, double b, double m, double x, double t);

cplx evolve_problem2_limit(double a, double b, double m, double x, double t);

cplx evolve_problem2_dirac_space(int n, double a, double b, double m, double x, double t,
                                 const special::PanelConfig& quad = {});

// ---- Case dispatch ---------------------------------------------------------

struct ProblemOne {
    double a;  // u(.,0) = F_n(.,a), u_t(.,0) = F_n'(.,a)
};
struct ProblemTwo {
    double a;  // u(.,0) = F_n(.,a)
    double b;  // u_t(.,0) = F_n(.,b)
};

enum class SourceTerm { zero, dirac_space, dirac_spacetime };

struct KgProblem {
    double m = 0.0;
    std::variant<ProblemOne, ProblemTwo> initial = ProblemOne{1.5};
    SourceTerm source = SourceTerm::zero;

    // dirac_spacetime is only defined for the first initial-data family
    void validate() const;
};

// Single-point dispatch over the closed forms above.
cplx evolve(const KgProblem& problem, int n, double x, double t,
            const special::PanelConfig& quad = {});

// Complex samples over a rectangular (x,t) grid; values row-major with t as
// the outer index. Rows are evaluated in parallel; assembly is deterministic.
struct SolutionField {
    std::vector<double> x_grid;
    std::vector<double> t_grid;
    std::vector<cplx> values;  // values[it * x_grid.size() + ix]
    KgProblem problem;
    int n = 0;

    cplx at(std::size_t it, std::size_t ix) const { return values[it * x_grid.size() + ix]; }
};

SolutionField evaluate_field(const KgProblem& problem, int n,
                             std::vector<double> x_grid, std::vector<double> t_grid,
                             const special::PanelConfig& quad = {});

}  // namespace skg::kg_spectral

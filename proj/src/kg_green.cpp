#include "superkg/kg_green.hpp"

#include <cmath>
#include <sstream>

#include "superkg/kg_spectral.hpp"

namespace skg::kg_green {

namespace {

// All four contributions at a fixed panel density. The pair check in
// green_solve runs this twice.
cplx solve_at_density(const IvpSpec& spec, double x, double t,
                      const special::PanelConfig& quad) {
    const double m = spec.m;
    cplx u = 0.5 * (spec.f(x - t) + spec.f(x + t));

    if (t > 0.0) {
        const special::QuadratureRule rule = quad.rule(x - t, x + t);
        cplx vel_term{0.0, 0.0};
        cplx pos_term{0.0, 0.0};
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double xi = rule.nodes[i];
            const double r2 = t * t - (x - xi) * (x - xi);
            const double r = r2 > 0.0 ? std::sqrt(r2) : 0.0;
            vel_term += rule.weights[i] * special::bessel_j0(m * r) * spec.g(xi);
            // J1(mR)/R = m * (J1(mR)/(mR)) stays finite at the endpoints
            pos_term += rule.weights[i] * special::bessel_j1_over_x(m * r) * spec.f(xi);
        }
        u += 0.5 * vel_term - 0.5 * m * m * t * pos_term;
    }

    if (const auto* sym = std::get_if<SymbolicSource>(&spec.source)) {
        if (*sym != SymbolicSource::zero)
            u += green_source_term(m, *sym, x, t, quad);
    } else {
        // General source by nested quadrature over the backward light cone.
        const auto& L = std::get<SourceFn>(spec.source);
        if (t > 0.0) {
            const special::QuadratureRule outer = quad.rule(0.0, t);
            cplx src{0.0, 0.0};
            for (std::size_t i = 0; i < outer.size(); ++i) {
                const double tau = outer.nodes[i];
                const double half_width = t - tau;
                if (half_width <= 0.0) continue;
                const special::QuadratureRule inner =
                    quad.rule(x - half_width, x + half_width);
                cplx row{0.0, 0.0};
                for (std::size_t k = 0; k < inner.size(); ++k) {
                    const double xi = inner.nodes[k];
                    const double r2 = half_width * half_width - (x - xi) * (x - xi);
                    const double r = r2 > 0.0 ? std::sqrt(r2) : 0.0;
                    row += inner.weights[k] * special::bessel_j0(m * r) * L(xi, tau);
                }
                src += outer.weights[i] * row;
            }
            u += 0.5 * src;
        }
    }
    return u;
}

}  // namespace

cplx green_solve(const IvpSpec& spec, double x, double t) {
    if (t < 0.0) throw std::domain_error("green_solve: requires t >= 0");
    if (!spec.f || !spec.g) throw std::invalid_argument("green_solve: f and g must be set");

    const cplx coarse = solve_at_density(spec, x, t, spec.quad);
    special::PanelConfig fine = spec.quad;
    fine.panels_per_unit *= 2.0;
    const cplx refined = solve_at_density(spec, x, t, fine);

    if (std::abs(coarse - refined) > spec.refine_tol) {
        std::ostringstream msg;
        msg << "green_solve: refinement pair disagrees beyond " << spec.refine_tol
            << " at (x,t)=(" << x << "," << t << "): coarse=(" << coarse.real() << ","
            << coarse.imag() << ") fine=(" << refined.real() << "," << refined.imag()
            << ")";
        throw special::QuadratureError(msg.str(), coarse, refined);
    }
    return refined;
}

double green_source_term(double m, SymbolicSource source, double x, double t,
                         const special::PanelConfig& quad) {
    switch (source) {
        case SymbolicSource::zero:
            return 0.0;
        case SymbolicSource::dirac_spacetime: {
            const double ax = std::abs(x);
            if (t < ax) return 0.0;
            return 0.5 * special::bessel_j0(m * std::sqrt(t * t - x * x));
        }
        case SymbolicSource::dirac_space:
            return kg_spectral::particular_dirac_space(m, x, t, quad);
    }
    return 0.0;
}

}  // namespace skg::kg_green

#include "superkg/kg_spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "quad_real.hpp"
#include "superkg/superosc.hpp"

namespace skg::kg_spectral {

namespace {

using detail::qcplx;
using detail::qreal;

void require_n(int n) {
    if (n < 1) throw std::domain_error("evolution requires n >= 1");
}

void require_materializable(int n, double a) {
    // same overflow gate as the coefficient set, memoized for sweeps
    thread_local int cached_n = -1;
    thread_local double cached_a = 0.0;
    thread_local bool cached_ok = false;
    if (cached_n != n || cached_a != a) {
        cached_ok = superosc::coefficients({n, a}).materialized;
        cached_n = n;
        cached_a = a;
    }
    if (!cached_ok)
        throw std::overflow_error("coefficient magnitude exceeds the double range");
}

// sum_j c_j e^{i lam_j x} K(lam_j) with a caller-supplied per-mode bracket.
template <class Kernel>
cplx spectral_sum(int n, double a, double x, Kernel&& bracket) {
    const auto& c = detail::quad_coefficients_cached(n, a);
    qcplx acc;
    for (int j = 0; j <= n; ++j) {
        const qreal lam = detail::quad_lambda(n, j);
        acc = acc + c[j] * (detail::unit_phase(lam * qreal(x)) * bracket(lam));
    }
    return detail::to_double(acc);
}

}  // namespace

cplx theta(double omega, double m, double t) {
    const double w = std::hypot(m, omega);
    if (w == 0.0) return {1.0, 0.0};
    return {std::cos(w * t), (omega / w) * std::sin(w * t)};
}

cplx evolve_homogeneous(int n, double a, double m, double x, double t) {
    require_n(n);
    require_materializable(n, a);
    const qreal mq = m, tq = t;
    return spectral_sum(n, a, x,
                        [&](qreal lam) { return detail::quad_theta(lam, mq, tq); });
}

cplx evolve_homogeneous_limit(double a, double m, double x, double t) {
    const cplx phase{std::cos(a * x), std::sin(a * x)};
    return phase * theta(a, m, t);
}

cplx evolve_operator_truncated(int n, double a, double m, double x, double t, int order) {
    require_n(n);
    if (order < 1) throw std::domain_error("operator truncation requires order >= 1");
    require_materializable(n, a);

    const qreal mq = m, tq = t;
    return spectral_sum(n, a, x, [&](qreal lam) {
        const qreal w2 = mq * mq + lam * lam;
        const qreal w2t2 = w2 * tq * tq;
        // Partial Taylor sums of cos(w t) and sin(w t)/w in powers of (w t)^2.
        qreal cos_part = 0, sin_part = 0;
        qreal tc = 1;        // (-1)^k (w t)^{2k} / (2k)!
        qreal ts = tq;       // (-1)^k w^{2k} t^{2k+1} / (2k+1)!
        for (int k = 0; k < order; ++k) {
            cos_part += tc;
            sin_part += ts;
            tc *= -w2t2 / qreal((2 * k + 1) * (2 * k + 2));
            ts *= -w2t2 / qreal((2 * k + 2) * (2 * k + 3));
        }
        return qcplx{cos_part, lam * sin_part};
    });
}

double particular_dirac_space(double m, double x, double t,
                              const special::PanelConfig& quad) {
    const double ax = std::abs(x);
    if (t <= ax) return 0.0;  // empty integration interval outside the cone
    const special::QuadratureRule rule = quad.rule(ax, t);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double s = rule.nodes[i];
        acc += rule.weights[i] * special::bessel_j0(m * std::sqrt(s * s - x * x));
    }
    return 0.5 * acc;
}

cplx evolve_dirac_space(int n, double a, double m, double x, double t,
                        const special::PanelConfig& quad) {
    return evolve_homogeneous(n, a, m, x, t) + particular_dirac_space(m, x, t, quad);
}

cplx evolve_dirac_spacetime(int n, double a, double m, double x, double t) {
    cplx u = evolve_homogeneous(n, a, m, x, t);
    if (t >= std::abs(x))  // H(0) = 1: boundary included
        u += 0.5 * special::bessel_j0(m * std::sqrt(t * t - x * x));
    return u;
}

cplx evolve_problem2(int n, double a, double b, double m, double x, double t) {
    require_n(n);
    require_materializable(n, a);
    require_materializable(n, b);

    const auto ca = detail::quad_coefficients(n, a);
    const auto cb = detail::quad_coefficients(n, b);
    const qreal mq = m, tq = t;
    qcplx acc;
    for (int j = 0; j <= n; ++j) {
        const qreal lam = detail::quad_lambda(n, j);
        const qcplx phase = detail::unit_phase(lam * qreal(x));
        const qreal w = sqrtq(mq * mq + lam * lam);
        const qreal kernel_a = cosq(w * tq);
        const qreal kernel_b = detail::quad_sin_over(w, tq);
        acc = acc + (ca[j] * kernel_a + cb[j] * kernel_b) * phase;
    }
    return detail::to_double(acc);
}

cplx evolve_problem2_limit(double a, double b, double m, double x, double t) {
    const double wa = std::hypot(m, a);
    const double wb = std::hypot(m, b);
    const cplx ea{std::cos(a * x), std::sin(a * x)};
    const cplx eb{std::cos(b * x), std::sin(b * x)};
    const double sin_term = wb == 0.0 ? t : std::sin(wb * t) / wb;
    return ea * std::cos(wa * t) + eb * sin_term;
}

cplx evolve_problem2_dirac_space(int n, double a, double b, double m, double x, double t,
                                 const special::PanelConfig& quad) {
    return evolve_problem2(n, a, b, m, x, t) + particular_dirac_space(m, x, t, quad);
}

void KgProblem::validate() const {
    if (source == SourceTerm::dirac_spacetime &&
        !std::holds_alternative<ProblemOne>(initial))
        throw std::invalid_argument(
            "the space-time point source is only defined for the first initial-data family");
}

cplx evolve(const KgProblem& problem, int n, double x, double t,
            const special::PanelConfig& quad) {
    problem.validate();
    if (const auto* p1 = std::get_if<ProblemOne>(&problem.initial)) {
        switch (problem.source) {
            case SourceTerm::zero:
                return evolve_homogeneous(n, p1->a, problem.m, x, t);
            case SourceTerm::dirac_space:
                return evolve_dirac_space(n, p1->a, problem.m, x, t, quad);
            case SourceTerm::dirac_spacetime:
                return evolve_dirac_spacetime(n, p1->a, problem.m, x, t);
        }
    }
    const auto& p2 = std::get<ProblemTwo>(problem.initial);
    switch (problem.source) {
        case SourceTerm::zero:
            return evolve_problem2(n, p2.a, p2.b, problem.m, x, t);
        case SourceTerm::dirac_space:
            return evolve_problem2_dirac_space(n, p2.a, p2.b, problem.m, x, t, quad);
        default:
            break;
    }
    throw std::invalid_argument("unsupported case combination");
}

SolutionField evaluate_field(const KgProblem& problem, int n, std::vector<double> x_grid,
                             std::vector<double> t_grid, const special::PanelConfig& quad) {
    problem.validate();
    require_n(n);

    SolutionField field;
    field.problem = problem;
    field.n = n;
    field.x_grid = std::move(x_grid);
    field.t_grid = std::move(t_grid);
    field.values.resize(field.x_grid.size() * field.t_grid.size());

    const std::size_t nx = field.x_grid.size();
    const std::size_t nt = field.t_grid.size();

    const auto eval_row = [&](std::size_t it) {
        const double t = field.t_grid[it];
        for (std::size_t ix = 0; ix < nx; ++ix)
            field.values[it * nx + ix] = evolve(problem, n, field.x_grid[ix], t, quad);
    };

    // Rows are independent; each thread writes disjoint slots, so the result
    // is identical to the sequential order.
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t want = std::min<std::size_t>(hw == 0 ? 1 : hw, nt);
    if (want <= 1 || field.values.size() < 4096) {
        for (std::size_t it = 0; it < nt; ++it) eval_row(it);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (std::size_t w = 0; w < want; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t it = w; it < nt; it += want) eval_row(it);
            });
        for (auto& th : pool) th.join();
    }
    return field;
}

}  // namespace skg::kg_spectral

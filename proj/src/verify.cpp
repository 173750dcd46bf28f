#include "superkg/verify.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace skg::verify {

namespace {

struct Sweep {
    double max_residual = 0.0;
    double scale = 0.0;  // max |field| over all stencil evaluations
};

Sweep residual_sweep(const Field& u, const Field& source, double m,
                     const std::vector<Point>& probes, double h) {
    Sweep sweep;
    const double inv_h2 = 1.0 / (h * h);
    for (const Point& p : probes) {
        const cplx c = u(p.x, p.t);
        const cplx tt = (u(p.x, p.t + h) - 2.0 * c + u(p.x, p.t - h)) * inv_h2;
        const cplx xx = (u(p.x + h, p.t) - 2.0 * c + u(p.x - h, p.t)) * inv_h2;
        const cplx res = tt - xx + m * m * c - source(p.x, p.t);
        sweep.max_residual = std::max(sweep.max_residual, std::abs(res));
        sweep.scale = std::max(sweep.scale, std::abs(c));
    }
    return sweep;
}

}  // namespace

ResidualReport residual_check(const Field& field, const Field& source, double m,
                              std::vector<Point> probes, double h, std::string excluded) {
    if (h <= 0.0) throw std::domain_error("residual_check: h must be positive");
    for (const Point& p : probes)
        if (p.t - h < 0.0)
            throw std::domain_error("residual_check: probes must satisfy t - h >= 0");

    ResidualReport rep;
    rep.h = h;
    rep.excluded = std::move(excluded);

    const Sweep full = residual_sweep(field, source, m, probes, h);
    const Sweep half = residual_sweep(field, source, m, probes, 0.5 * h);
    rep.max_abs_residual = full.max_residual;
    rep.max_abs_residual_half = half.max_residual;
    rep.field_scale = std::max(full.scale, half.scale);
    rep.refinement_ratio =
        half.max_residual > 0.0 ? full.max_residual / half.max_residual : 0.0;

    // A second-order stencil quarters the residual; below the rounding floor
    // (stencil noise ~ eps * |u| / h^2) the ratio is meaningless and no flag
    // is raised.
    const double half_h = 0.5 * h;
    const double noise_floor = 64.0 * DBL_EPSILON * rep.field_scale / (half_h * half_h);
    rep.second_order_ok =
        rep.refinement_ratio >= 3.5 || half.max_residual <= noise_floor;
    rep.probes = std::move(probes);
    return rep;
}

ConvergenceLadder ladder(const std::function<LineFn(int)>& fn_of_n, const LineFn& limit,
                         std::vector<int> n_values, const std::vector<double>& xs,
                         std::string compact_set) {
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1])
            throw std::domain_error("ladder: n_values must be strictly increasing");

    ConvergenceLadder lad;
    lad.compact_set = std::move(compact_set);
    lad.errors.reserve(n_values.size());
    for (int n : n_values) {
        const LineFn fn = fn_of_n(n);
        double err = 0.0;
        for (double x : xs) err = std::max(err, std::abs(fn(x) - limit(x)));
        lad.errors.push_back(err);
    }
    lad.monotone = true;
    for (std::size_t i = 1; i < lad.errors.size(); ++i)
        if (!(lad.errors[i] < lad.errors[i - 1])) lad.monotone = false;
    lad.n_values = std::move(n_values);
    return lad;
}

std::vector<Point> probe_grid(double x0, double x1, int nx, double t0, double t1, int nt,
                              double h, bool exclude_source, bool exclude_light_cone) {
    std::vector<Point> probes;
    const double radius = 3.0 * h;
    for (int it = 0; it < nt; ++it) {
        const double t = nt == 1 ? t0 : t0 + (t1 - t0) * it / (nt - 1);
        for (int ix = 0; ix < nx; ++ix) {
            const double x = nx == 1 ? x0 : x0 + (x1 - x0) * ix / (nx - 1);
            if (exclude_source && std::abs(x) < radius) continue;
            if (exclude_light_cone && std::abs(std::abs(x) - t) < radius) continue;
            probes.push_back({x, t});
        }
    }
    return probes;
}

}  // namespace skg::verify

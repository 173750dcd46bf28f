#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

// Reusable verification harness: second-order PDE residual checker with a
// refinement pair, convergence-ladder reporter, and oracle comparators.

namespace skg::verify {

using cplx = std::complex<double>;
using Field = std::function<cplx(double, double)>;
using LineFn = std::function<cplx(double)>;

struct Point {
    double x;
    double t;
};

struct ResidualReport {
    std::vector<Point> probes;
    double h = 0.0;
    double max_abs_residual = 0.0;       // at step h
    double max_abs_residual_half = 0.0;  // at step h/2
    double refinement_ratio = 0.0;       // residual(h) / residual(h/2)
    double field_scale = 0.0;            // max |field| seen over the stencils
    std::string excluded;                // description of excluded sets
    bool second_order_ok = false;        // ratio >= 3.5, or residual at noise floor
};

// Central-difference residual (d_tt - d_xx + m^2) field - source at the
// probes, evaluated for h and h/2. Probes must be interior: t - h >= 0.
// Non-O(h^2) behavior is flagged in the report, not thrown.
ResidualReport residual_check(const Field& field, const Field& source, double m,
                              std::vector<Point> probes, double h,
                              std::string excluded = {});

struct ConvergenceLadder {
    std::vector<int> n_values;
    std::vector<double> errors;  // sup-norm over the sampled compact set
    bool monotone = false;       // strictly decreasing
    std::string compact_set;
};

// Sup-norm errors of fn_of_n(n) against `limit` over the sampled compact set,
// for each n in the strictly increasing n_values.
ConvergenceLadder ladder(const std::function<LineFn(int)>& fn_of_n, const LineFn& limit,
                         std::vector<int> n_values, const std::vector<double>& xs,
                         std::string compact_set = {});

struct CompareReport {
    double max_abs_diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::size_t argmax = 0;  // index of the worst probe
};

template <class Probe>
CompareReport oracle_compare(const std::function<cplx(const Probe&)>& lhs,
                             const std::function<cplx(const Probe&)>& rhs,
                             const std::vector<Probe>& probes, double tol) {
    CompareReport rep;
    rep.tol = tol;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double d = std::abs(lhs(probes[i]) - rhs(probes[i]));
        if (d > rep.max_abs_diff) {
            rep.max_abs_diff = d;
            rep.argmax = i;
        }
    }
    rep.pass = rep.max_abs_diff <= tol;
    return rep;
}

// Rectangular probe lattice with exclusion zones of radius 3h around the
// source line x = 0 and/or the light-cone boundary |x| = t.
std::vector<Point> probe_grid(double x0, double x1, int nx, double t0, double t1, int nt,
                              double h, bool exclude_source, bool exclude_light_cone);

}  // namespace skg::verify

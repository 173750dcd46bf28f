#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Self-contained special functions and quadrature rules used by every other
// module: Bessel J0/J1, normalized Hermite functions, Gauss-Hermite and
// composite Gauss-Legendre rules, log-domain binomial coefficients.

namespace skg::special {

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double quarter_root_pi_inv = 0.75112554446494248286;  // pi^(-1/4)
inline constexpr double quarter_root_pi = 1.33133536380038971648;      // pi^(1/4)

// Bessel function of the first kind, order zero. Power series for |x| <= 8,
// Hankel asymptotic form with minimax rational coefficients beyond.
// Absolute error <= 1e-12 for |x| <= 500.
double bessel_j0(double x);

// Bessel function of the first kind, order one. Same evaluation strategy.
double bessel_j1(double x);

// J1(x)/x with the removable singularity evaluated by its series below
// |x| < 1e-4; limit value 1/2 at x = 0.
double bessel_j1_over_x(double x);

// Normalized Hermite function psi_k(x): psi_0 = pi^(-1/4) exp(-x^2/2),
// psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}.
// k is capped at the stability bound of the recurrence.
inline constexpr int hermite_fn_max_order = 200;
double hermite_fn(int k, double x);

enum class RuleKind { gauss_hermite, gauss_legendre };

// Immutable after construction; nodes strictly increasing, weights positive.
struct QuadratureRule {
    RuleKind kind;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    double weight_sum() const;

    // sum_i w_i f(x_i)
    template <class F>
    auto integrate(F&& f) const -> decltype(f(0.0)) {
        decltype(f(0.0)) acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// n-point rule for integral of f(x) exp(-x^2) over the real line, exact for
// polynomial f of degree <= 2n-1. Nodes from the Jacobi-matrix
// eigendecomposition, Newton-polished; 1 <= n <= 256.
QuadratureRule gauss_hermite(int n);

// Composite Gauss-Legendre rule on [a, b], `panels` panels of `order` points
// each; exact for degree <= 2*order-1 per panel. Requires a <= b.
QuadratureRule gauss_legendre_panels(double a, double b, int panels, int order);

// ln binomial(n, j) via log-gamma; requires 0 <= j <= n.
double log_binomial(int n, int j);

// Panels-per-unit-length configuration for causal-interval quadratures.
struct PanelConfig {
    double panels_per_unit = 16.0;
    int order = 10;

    int panels_for(double a, double b) const;
    QuadratureRule rule(double a, double b) const;
};

// Refinement-pair disagreement, reported with both values.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, std::complex<double> coarse,
                    std::complex<double> fine)
        : std::runtime_error(what), coarse_value(coarse), fine_value(fine) {}

    std::complex<double> coarse_value;
    std::complex<double> fine_value;
};

}  // namespace skg::special

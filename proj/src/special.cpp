#include "superkg/special.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace skg::special {

namespace {

// p[0] + p[1] y + ... + p[N-1] y^{N-1}
template <std::size_t N>
double poly_eval(const double (&p)[N], double y) {
    double r = p[N - 1];
    for (std::size_t i = N - 1; i-- > 0;) r = r * y + p[i];
    return r;
}

template <std::size_t N>
double rational_eval(const double (&p)[N], const double (&q)[N], double y) {
    return poly_eval(p, y) / poly_eval(q, y);
}

// J0 power series: sum (-1)^k (x^2/4)^k / (k!)^2. Largest term is ~114 at
// x = 8, so accumulated roundoff stays below 1e-13 on the series branch.
double j0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, acc = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (double(k) * double(k));
        acc += term;
        if (std::abs(term) < 1e-20) break;
    }
    return acc;
}

// J1(x)/(x/2) = sum (-1)^k (x^2/4)^k / (k! (k+1)!)
double j1_series_factor(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, acc = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (double(k) * double(k + 1));
        acc += term;
        if (std::abs(term) < 1e-20) break;
    }
    return acc;
}

// Hankel-region minimax rational coefficients (Hart, "Computer
// Approximations", 1968), valid for x > 8:
//   J0(x) = sqrt(2/(pi x)) (rc cos(x - pi/4)   - (8/x) rs sin(x - pi/4))
//   J1(x) = sqrt(2/(pi x)) (rc cos(x - 3pi/4)  - (8/x) rs sin(x - 3pi/4))
// with rc, rs rational in (8/x)^2.
const double j0_pc[6] = {2.2779090197304684302e+04, 4.1345386639580765797e+04,
                         2.1170523380864944322e+04, 3.4806486443249270347e+03,
                         1.5376201909008354296e+02, 8.8961548424210455236e-01};
const double j0_qc[6] = {2.2779090197304684318e+04, 4.1370412495510416640e+04,
                         2.1215350561880115730e+04, 3.5028735138235608207e+03,
                         1.5711159858080893649e+02, 1.0};
const double j0_ps[6] = {-8.9226600200800094098e+01, -1.8591953644342993800e+02,
                         -1.1183429920482737611e+02, -2.2300261666214198472e+01,
                         -1.2441026745835638459e+00, -8.8033303048680751817e-03};
const double j0_qs[6] = {5.7105024128512061905e+03, 1.1951131543434613647e+04,
                         7.2642780169211018836e+03, 1.4887231232283756582e+03,
                         9.0593769594993125859e+01, 1.0};

const double j1_pc[7] = {-4.4357578167941278571e+06, -9.9422465050776411957e+06,
                         -6.6033732483649391093e+06, -1.5235293511811373833e+06,
                         -1.0982405543459346727e+05, -1.6116166443246101165e+03,
                         0.0};
const double j1_qc[7] = {-4.4357578167941278568e+06, -9.9341243899345856590e+06,
                         -6.5853394797230870728e+06, -1.5118095066341608816e+06,
                         -1.0726385991103820119e+05, -1.4550094401904961825e+03,
                         1.0};
const double j1_ps[7] = {3.3220913409857223519e+04, 8.5145160675335701966e+04,
                         6.6178836581270835179e+04, 1.8494262873223866797e+04,
                         1.7063754290207680021e+03, 3.5265133846636032186e+01,
                         0.0};
const double j1_qs[7] = {7.0871281941028743574e+05, 1.8194580422439972989e+06,
                         1.4194606696037208929e+06, 4.0029443582266975117e+05,
                         3.7890229745772202641e+04, 8.6383677696049909675e+02,
                         1.0};

double j0_hankel(double x) {
    const double y = 8.0 / x;
    const double y2 = y * y;
    const double z = x - 0.25 * pi;
    const double rc = rational_eval(j0_pc, j0_qc, y2);
    const double rs = rational_eval(j0_ps, j0_qs, y2);
    return std::sqrt(2.0 / (pi * x)) * (rc * std::cos(z) - y * rs * std::sin(z));
}

double j1_hankel(double x) {
    const double y = 8.0 / x;
    const double y2 = y * y;
    const double z = x - 0.75 * pi;
    const double rc = rational_eval(j1_pc, j1_qc, y2);
    const double rs = rational_eval(j1_ps, j1_qs, y2);
    return std::sqrt(2.0 / (pi * x)) * (rc * std::cos(z) - y * rs * std::sin(z));
}

// Orthonormal Hermite recurrence value and first derivative at z:
//   h_{k+1} = z sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1},  h_0 = pi^{-1/4}
// h'_n(z) = sqrt(2n) h_{n-1}(z).
void hermite_ortho(int n, double z, double& hn, double& dhn) {
    double hk = quarter_root_pi_inv, hkm = 0.0;
    for (int k = 0; k < n; ++k) {
        const double hkp = z * std::sqrt(2.0 / (k + 1)) * hk -
                           std::sqrt(double(k) / (k + 1)) * hkm;
        hkm = hk;
        hk = hkp;
    }
    hn = hk;
    dhn = std::sqrt(2.0 * n) * hkm;
}

// Legendre P_n and derivative at z.
void legendre(int n, double z, double& pn, double& dpn) {
    double pk = 1.0, pkm = 0.0;
    for (int k = 0; k < n; ++k) {
        const double pkp = ((2 * k + 1) * z * pk - k * pkm) / (k + 1);
        pkm = pk;
        pk = pkp;
    }
    pn = pk;
    dpn = n * (z * pk - pkm) / (z * z - 1.0);
}

// Base rule on [-1, 1] by Newton iteration on the Legendre roots.
QuadratureRule gauss_legendre_base(int order) {
    QuadratureRule rule{RuleKind::gauss_legendre, {}, {}};
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pn = 0.0, dpn = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre(order, z, pn, dpn);
            const double dz = pn / dpn;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        legendre(order, z, pn, dpn);
        const double w = 2.0 / ((1.0 - z * z) * dpn * dpn);
        rule.nodes[i] = -z;  // cos-init enumerates roots from the largest down
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

double bessel_j0(double x) {
    x = std::abs(x);  // even
    if (x <= 8.0) return j0_series(x);
    return j0_hankel(x);
}

double bessel_j1(double x) {
    const double w = std::abs(x);
    double value;
    if (w <= 8.0)
        value = 0.5 * w * j1_series_factor(w);
    else
        value = j1_hankel(w);
    return x < 0 ? -value : value;  // odd
}

double bessel_j1_over_x(double x) {
    const double w = std::abs(x);
    if (w <= 8.0) return 0.5 * j1_series_factor(w);  // covers the x -> 0 limit 1/2
    return bessel_j1(w) / w;
}

double hermite_fn(int k, double x) {
    if (k < 0) throw std::domain_error("hermite_fn: order must be >= 0");
    if (k > hermite_fn_max_order)
        throw std::domain_error("hermite_fn: order exceeds the recurrence stability bound");
    double hk = quarter_root_pi_inv * std::exp(-0.5 * x * x);
    double hkm = 0.0;
    for (int j = 0; j < k; ++j) {
        const double hkp = x * std::sqrt(2.0 / (j + 1)) * hk -
                           std::sqrt(double(j) / (j + 1)) * hkm;
        hkm = hk;
        hk = hkp;
    }
    return hk;
}

double QuadratureRule::weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1 || n > 256) throw std::domain_error("gauss_hermite: n must be in [1, 256]");

    QuadratureRule rule{RuleKind::gauss_hermite, {}, {}};
    rule.nodes.resize(n);
    rule.weights.resize(n);

    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = sqrt_pi;
        return rule;
    }

    // Jacobi matrix: zero diagonal, off-diagonal sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi,
                                                          Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();  // ascending

    // Newton polish on the upper half, mirror for symmetry.
    for (int i = n / 2; i < n; ++i) {
        double z = ev(i);
        double hn = 0.0, dhn = 0.0;
        for (int it = 0; it < 60; ++it) {
            hermite_ortho(n, z, hn, dhn);
            const double dz = hn / dhn;
            z -= dz;
            if (std::abs(dz) <= 1e-14 * std::max(1.0, std::abs(z))) break;
        }
        hermite_ortho(n, z, hn, dhn);
        const double w = 2.0 / (dhn * dhn);
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_legendre_panels(double a, double b, int panels, int order) {
    if (a > b) throw std::domain_error("gauss_legendre_panels: requires a <= b");
    if (panels < 1) throw std::domain_error("gauss_legendre_panels: panels must be >= 1");
    if (order < 1) throw std::domain_error("gauss_legendre_panels: order must be >= 1");

    QuadratureRule rule{RuleKind::gauss_legendre, {}, {}};
    if (a == b) return rule;  // empty interval, empty rule

    const QuadratureRule base = gauss_legendre_base(order);
    rule.nodes.reserve(std::size_t(panels) * order);
    rule.weights.reserve(std::size_t(panels) * order);
    const double len = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * len;
        const double mid = lo + 0.5 * len;
        const double scale = 0.5 * len;
        for (int i = 0; i < order; ++i) {
            rule.nodes.push_back(mid + scale * base.nodes[i]);
            rule.weights.push_back(scale * base.weights[i]);
        }
    }
    return rule;
}

double log_binomial(int n, int j) {
    if (n < 1) throw std::domain_error("log_binomial: n must be >= 1");
    if (j < 0 || j > n) throw std::domain_error("log_binomial: requires 0 <= j <= n");
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(j) + 1.0) -
           std::lgamma(double(n - j) + 1.0);
}

int PanelConfig::panels_for(double a, double b) const {
    const double len = b - a;
    return std::max(1, int(std::ceil(panels_per_unit * len)));
}

QuadratureRule PanelConfig::rule(double a, double b) const {
    return gauss_legendre_panels(a, b, panels_for(a, b), order);
}

}  // namespace skg::special

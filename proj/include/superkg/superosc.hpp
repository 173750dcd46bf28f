#pragma once

#include <complex>
#include <functional>
#include <vector>

// Superoscillating coefficients and sequences: the weight set C_j(n,a), the
// band-limited sum F_n(x,a), its stable product resummation, the x-derivative,
// and the generic supershift combiner over the frequency grid 1 - 2j/n.

namespace skg::superosc {

using cplx = std::complex<double>;

struct SuperoscillationParams {
    int n;     // number of terms minus one, n >= 1
    double a;  // target frequency; |a| > 1 in the superoscillatory regime
};

// C_j(n,a) = binom(n,j) ((1+a)/2)^(n-j) ((1-a)/2)^j, stored in
// log-magnitude + sign form so n in the hundreds survives. `values` holds the
// materialized doubles when every exponent fits the double range; otherwise
// it is empty and value() reports the overflow.
struct CoefficientSet {
    int n = 0;
    double a = 0.0;
    std::vector<double> log_magnitudes;  // ln|C_j|, -inf for exact zeros
    std::vector<int> signs;              // -1, 0, +1
    std::vector<double> values;          // empty when not materialized
    bool materialized = false;

    double lambda(int j) const { return 1.0 - 2.0 * double(j) / double(n); }
    double value(int j) const;  // throws std::overflow_error if not materialized
    double sum() const;
};

CoefficientSet coefficients(const SuperoscillationParams& params);

// Residuals of the two exact coefficient identities, sum C_j - 1 and
// sum C_j (1-2j/n) - a, evaluated through the extended-precision pipeline.
struct IdentityResiduals {
    double sum_minus_one;
    double moment_minus_a;
};
IdentityResiduals coefficient_identity_residuals(const SuperoscillationParams& params);

// The literal sum  sum_j C_j e^{i(1-2j/n)x}.  This is the cancellation-prone
// form, kept deliberately; the internal accumulation carries enough precision
// that the returned double is accurate despite the cancellation.
cplx eval_fn_sum(const SuperoscillationParams& params, double x);

// (cos(x/n) + i a sin(x/n))^n — algebraically identical to eval_fn_sum by the
// binomial theorem, numerically stable for large n; serves as the oracle form.
cplx eval_fn_product(const SuperoscillationParams& params, double x);

// sum_j C_j i(1-2j/n) e^{i(1-2j/n)x}
cplx eval_fn_derivative(const SuperoscillationParams& params, double x);

// Generic combiner  sum_j C_j(n,a) phi(1-2j/n)  with phi already closed over
// its target argument. Callback failures propagate.
cplx supershift(const CoefficientSet& coeffs, const std::function<cplx(double)>& phi);

}  // namespace skg::superosc

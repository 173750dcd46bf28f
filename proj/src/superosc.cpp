#include "superkg/superosc.hpp"

#include <cmath>
#include <limits>

#include "quad_real.hpp"
#include "superkg/special.hpp"

namespace skg::superosc {

namespace {

constexpr double materialize_limit = 709.0;  // ln(DBL_MAX) with margin

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

[[noreturn]] void throw_overflow() {
    throw std::overflow_error(
        "coefficient magnitude exceeds the double range; only log magnitudes are available");
}

void require_n(int n) {
    if (n < 1) throw std::domain_error("superoscillation parameters require n >= 1");
}

// Memoized overflow gate; sweeps evaluate one (n, a) pair at a time.
bool materializable_cached(int n, double a) {
    thread_local int cached_n = -1;
    thread_local double cached_a = 0.0;
    thread_local bool cached_ok = false;
    if (cached_n != n || cached_a != a) {
        cached_ok = coefficients({n, a}).materialized;
        cached_n = n;
        cached_a = a;
    }
    return cached_ok;
}

}  // namespace

double CoefficientSet::value(int j) const {
    if (!materialized) throw_overflow();
    return values[std::size_t(j)];
}

double CoefficientSet::sum() const {
    if (!materialized) throw_overflow();
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

CoefficientSet coefficients(const SuperoscillationParams& params) {
    require_n(params.n);
    const int n = params.n;
    const double a = params.a;
    const double u = 0.5 * (1.0 + a);
    const double v = 0.5 * (1.0 - a);

    CoefficientSet set;
    set.n = n;
    set.a = a;
    set.log_magnitudes.resize(n + 1);
    set.signs.resize(n + 1);

    const double log_u = std::log(std::abs(u));  // -inf at a = -1
    const double log_v = std::log(std::abs(v));  // -inf at a = +1
    const int sign_u = sign_of(u);
    const int sign_v = sign_of(v);

    // sign(C_j) = sign(u)^(n-j) sign(v)^j; a zero base with positive exponent
    // makes the coefficient an exact zero.
    const auto pow_sign = [](int s, int k) { return (s < 0 && k % 2 == 1) ? -1 : 1; };

    double max_log = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= n; ++j) {
        if ((j < n && sign_u == 0) || (j > 0 && sign_v == 0)) {
            set.log_magnitudes[j] = -std::numeric_limits<double>::infinity();
            set.signs[j] = 0;
            continue;
        }
        const double term_u = j < n ? (n - j) * log_u : 0.0;  // avoid 0 * (-inf)
        const double term_v = j > 0 ? j * log_v : 0.0;
        set.log_magnitudes[j] = special::log_binomial(n, j) + term_u + term_v;
        set.signs[j] = pow_sign(sign_u, n - j) * pow_sign(sign_v, j);
        max_log = std::max(max_log, set.log_magnitudes[j]);
    }

    set.materialized = max_log <= materialize_limit;
    if (set.materialized) {
        const std::vector<detail::qreal> c = detail::quad_coefficients(n, a);
        set.values.resize(n + 1);
        for (int j = 0; j <= n; ++j) set.values[j] = static_cast<double>(c[j]);
    }
    return set;
}

IdentityResiduals coefficient_identity_residuals(const SuperoscillationParams& params) {
    require_n(params.n);
    const auto& c = detail::quad_coefficients_cached(params.n, params.a);
    detail::qreal sum = 0, moment = 0;
    for (int j = 0; j <= params.n; ++j) {
        sum += c[j];
        moment += c[j] * detail::quad_lambda(params.n, j);
    }
    return {static_cast<double>(sum - 1), static_cast<double>(moment - detail::qreal(params.a))};
}

cplx eval_fn_sum(const SuperoscillationParams& params, double x) {
    require_n(params.n);
    if (!materializable_cached(params.n, params.a)) throw_overflow();

    const auto& c = detail::quad_coefficients_cached(params.n, params.a);
    detail::qcplx acc;
    for (int j = 0; j <= params.n; ++j) {
        const detail::qreal lam = detail::quad_lambda(params.n, j);
        acc = acc + c[j] * detail::unit_phase(lam * detail::qreal(x));
    }
    return detail::to_double(acc);
}

cplx eval_fn_product(const SuperoscillationParams& params, double x) {
    require_n(params.n);
    const double u = x / params.n;
    cplx base{std::cos(u), params.a * std::sin(u)};
    cplx acc{1.0, 0.0};
    for (int k = params.n; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

cplx eval_fn_derivative(const SuperoscillationParams& params, double x) {
    require_n(params.n);
    if (!materializable_cached(params.n, params.a)) throw_overflow();

    const auto& c = detail::quad_coefficients_cached(params.n, params.a);
    detail::qcplx acc;
    for (int j = 0; j <= params.n; ++j) {
        const detail::qreal lam = detail::quad_lambda(params.n, j);
        const detail::qcplx term = c[j] * detail::unit_phase(lam * detail::qreal(x));
        // times i*lambda
        acc = acc + detail::qcplx{-lam * term.im, lam * term.re};
    }
    return detail::to_double(acc);
}

cplx supershift(const CoefficientSet& coeffs, const std::function<cplx(double)>& phi) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j <= coeffs.n; ++j) acc += coeffs.value(j) * phi(coeffs.lambda(j));
    return acc;
}

}  // namespace skg::superosc

#pragma once

#include <quadmath.h>

#include <complex>
#include <stdexcept>
#include <vector>

// Private extended-precision core for the spectral sums. The superoscillatory
// weights C_j(n,a) reach ~1e18 in magnitude while their signed sums are O(1),
// so the literal-sum evaluations are accumulated in __float128 and rounded to
// double once, on return. Nothing in here leaks into public headers.

namespace skg::detail {

using qreal = __float128;

struct qcplx {
    qreal re = 0;
    qreal im = 0;
};

inline qcplx operator+(qcplx a, qcplx b) { return {a.re + b.re, a.im + b.im}; }
inline qcplx operator*(qcplx a, qcplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcplx operator*(qreal s, qcplx a) { return {s * a.re, s * a.im}; }

inline std::complex<double> to_double(qcplx v) {
    return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

// e^{i phi}
inline qcplx unit_phase(qreal phi) {
    qreal s, c;
    sincosq(phi, &s, &c);
    return {c, s};
}

// x^k by binary exponentiation, k >= 0
inline qreal ipow(qreal x, int k) {
    qreal acc = 1;
    qreal base = x;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

// Weights c_j = binom(n,j) u^{n-j} v^j with u = (1+a)/2, v = (1-a)/2.
inline std::vector<qreal> quad_coefficients(int n, double a) {
    if (n < 1) throw std::domain_error("quad_coefficients: n must be >= 1");
    const qreal u = (qreal(1) + qreal(a)) / 2;
    const qreal v = (qreal(1) - qreal(a)) / 2;
    std::vector<qreal> upow(n + 1), vpow(n + 1), binom(n + 1), c(n + 1);
    upow[0] = vpow[0] = binom[0] = 1;
    for (int k = 1; k <= n; ++k) {
        upow[k] = upow[k - 1] * u;
        vpow[k] = vpow[k - 1] * v;
        binom[k] = binom[k - 1] * qreal(n - k + 1) / qreal(k);
    }
    for (int j = 0; j <= n; ++j) c[j] = binom[j] * upow[n - j] * vpow[j];
    return c;
}

inline qreal quad_lambda(int n, int j) {
    return qreal(1) - qreal(2) * qreal(j) / qreal(n);
}

// Single-entry memo: grid sweeps and tensor quadratures hammer one (n, a)
// pair at a time, so this removes the per-point rebuild without any locking
// (thread-local, and the evaluations are pure).
inline const std::vector<qreal>& quad_coefficients_cached(int n, double a) {
    thread_local int cached_n = -1;
    thread_local double cached_a = 0.0;
    thread_local std::vector<qreal> cached;
    if (cached_n != n || cached_a != a) {
        cached = quad_coefficients(n, a);
        cached_n = n;
        cached_a = a;
    }
    return cached;
}

// theta_{lambda,m}(t) in quad precision; 1 at w = 0.
inline qcplx quad_theta(qreal lambda, qreal m, qreal t) {
    const qreal w = sqrtq(m * m + lambda * lambda);
    if (w == 0) return {1, 0};
    qreal s, c;
    sincosq(w * t, &s, &c);
    return {c, (lambda / w) * s};
}

// sin(w t)/w, with the series limit below |w t| < 1e-4 (equals t at w = 0).
inline qreal quad_sin_over(qreal w, qreal t) {
    const qreal wt = w * t;
    if (fabsq(wt) < qreal(1e-4)) {
        const qreal s = wt * wt;
        return t * (1 - s / 6 + (s * s) / 120);
    }
    return sinq(wt) / w;
}

}  // namespace skg::detail

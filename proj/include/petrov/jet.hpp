// SPDX-License-Identifier: Apache-2.0
//
// Truncated second-order Taylor jet in four variables: value, gradient
// and Hessian propagate through arithmetic exactly (to machine
// precision), which is what the curvature pipeline needs from the metric
// coefficients.
#pragma once

#include "petrov/core.hpp"

#include <cmath>

namespace petrov {

struct Jet2 {
    double val = 0.0;
    Vec4 grad = Vec4::Zero();
    Mat4 hess = Mat4::Zero();  // symmetric by construction

    Jet2() = default;
    explicit Jet2(double v) : val(v) {}

    static Jet2 constant(double c) { return Jet2(c); }

    static Jet2 variable(double x, int index) {
        Jet2 j(x);
        j.grad[index] = 1.0;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r;
        r.val = -val;
        r.grad = -grad;
        r.hess = -hess;
        return r;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.val = a.val + b.val;
    r.grad = a.grad + b.grad;
    r.hess = a.hess + b.hess;
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.val = a.val - b.val;
    r.grad = a.grad - b.grad;
    r.hess = a.hess - b.hess;
    return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.val = a.val * b.val;
    r.grad = a.grad * b.val + b.grad * a.val;
    const Mat4 cross = a.grad * b.grad.transpose();
    r.hess = a.hess * b.val + b.hess * a.val + cross + cross.transpose();
    return r;
}

inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2(c); }
inline Jet2 operator+(double c, const Jet2& a) { return Jet2(c) + a; }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2(c) - a; }

inline Jet2 operator*(const Jet2& a, double c) {
    Jet2 r;
    r.val = a.val * c;
    r.grad = a.grad * c;
    r.hess = a.hess * c;
    return r;
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

// f(u) with the second-order chain rule:
// (f o u)'' = f'(u) u'' + f''(u) u' (x) u'.
inline Jet2 chain(const Jet2& u, double f, double df, double ddf) {
    Jet2 r;
    r.val = f;
    r.grad = df * u.grad;
    r.hess = df * u.hess + ddf * (u.grad * u.grad.transpose());
    return r;
}

inline Jet2 reciprocal(const Jet2& u) {
    if (u.val == 0.0) throw EvalError("division by zero");
    const double inv = 1.0 / u.val;
    return chain(u, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(const Jet2& a, double c) {
    if (c == 0.0) throw EvalError("division by zero");
    return a * (1.0 / c);
}
inline Jet2 operator/(double c, const Jet2& b) { return Jet2(c) * reciprocal(b); }

inline Jet2 sin(const Jet2& u) {
    const double s = std::sin(u.val), c = std::cos(u.val);
    return chain(u, s, c, -s);
}
inline Jet2 cos(const Jet2& u) {
    const double s = std::sin(u.val), c = std::cos(u.val);
    return chain(u, c, -s, -c);
}
inline Jet2 tan(const Jet2& u) {
    const double c = std::cos(u.val);
    if (c == 0.0) throw EvalError("tan at a pole");
    const double t = std::tan(u.val);
    const double sec2 = 1.0 + t * t;
    return chain(u, t, sec2, 2.0 * t * sec2);
}
inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.val);
    return chain(u, e, e, e);
}
inline Jet2 log(const Jet2& u) {
    if (u.val <= 0.0) throw EvalError("log of a non-positive value");
    const double inv = 1.0 / u.val;
    return chain(u, std::log(u.val), inv, -inv * inv);
}
inline Jet2 sqrt(const Jet2& u) {
    if (u.val < 0.0) throw EvalError("sqrt of a negative value");
    if (u.val == 0.0) throw EvalError("sqrt jet at zero has no derivative");
    const double r = std::sqrt(u.val);
    return chain(u, r, 0.5 / r, -0.25 / (r * u.val));
}
inline Jet2 sinh(const Jet2& u) {
    const double s = std::sinh(u.val), c = std::cosh(u.val);
    return chain(u, s, c, s);
}
inline Jet2 cosh(const Jet2& u) {
    const double s = std::sinh(u.val), c = std::cosh(u.val);
    return chain(u, c, s, c);
}
inline Jet2 tanh(const Jet2& u) {
    const double t = std::tanh(u.val);
    const double sech2 = 1.0 - t * t;
    return chain(u, t, sech2, -2.0 * t * sech2);
}

// Integer powers go through repeated multiplication so that negative
// bases stay exact; pow_jet handles the general case (base > 0).
Jet2 pow_int(const Jet2& u, long long n);
Jet2 pow_jet(const Jet2& base, const Jet2& expo);

}  // namespace petrov

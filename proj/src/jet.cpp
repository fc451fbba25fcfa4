// SPDX-License-Identifier: Apache-2.0
#include "petrov/jet.hpp"

namespace petrov {

Jet2 pow_int(const Jet2& u, long long n) {
    if (n == 0) return Jet2(1.0);
    if (n < 0) return reciprocal(pow_int(u, -n));
    Jet2 acc(1.0);
    Jet2 base = u;
    long long e = n;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

static bool is_constant(const Jet2& j) {
    return j.grad.isZero(0.0) && j.hess.isZero(0.0);
}

Jet2 pow_jet(const Jet2& base, const Jet2& expo) {
    if (is_constant(expo)) {
        const double e = expo.val;
        const double rounded = std::nearbyint(e);
        if (e == rounded && std::abs(e) <= 1e9) {
            if (base.val == 0.0 && e < 0)
                throw EvalError("zero raised to a negative power");
            return pow_int(base, static_cast<long long>(rounded));
        }
        if (base.val <= 0.0)
            throw EvalError("non-integer power of a non-positive base");
        const double f = std::pow(base.val, e);
        const double df = e * std::pow(base.val, e - 1.0);
        const double ddf = e * (e - 1.0) * std::pow(base.val, e - 2.0);
        return chain(base, f, df, ddf);
    }
    if (base.val <= 0.0)
        throw EvalError("variable power of a non-positive base");
    return exp(expo * log(base));
}

}  // namespace petrov

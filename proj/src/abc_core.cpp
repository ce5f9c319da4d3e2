#include "tanglekit/abc_core.hpp"

#include <cmath>

namespace tanglekit {

invariant_triple transform(const invariant_triple& t, cplx x) {
    const cplx xc = std::conj(x);
    const double r2 = std::norm(x);
    const double den = 1.0 + r2;
    invariant_triple o;
    o.a = (t.a - xc * t.b + xc * xc * t.c) / den;
    o.b = (t.b * (1.0 - r2) - 2.0 * xc * t.c + 2.0 * x * t.a) / den;
    o.c = (t.c + x * t.b + x * x * t.a) / den;
    return o;
}

double i1(const invariant_triple& t) {
    return std::norm(t.a) + 0.5 * std::norm(t.b) + std::norm(t.c);
}

double i2(const invariant_triple& t) {
    return std::abs(t.b * t.b - 4.0 * t.a * t.c);
}

std::pair<cplx, cplx> x0_root(const invariant_triple& t) {
    if (std::abs(t.c) < 1e-12) throw degenerate_c_error("C coefficient below 1e-12");
    const cplx rt = std::sqrt(t.b * t.b - 4.0 * t.a * t.c);
    // the quadratic solves for conj(x)
    return {std::conj((t.b + rt) / (2.0 * t.c)), std::conj((t.b - rt) / (2.0 * t.c))};
}

double tau_upper(const invariant_triple& t) {
    const double v = 4.0 * i1(t) - 2.0 * i2(t);
    if (v < -1e-10) throw negative_bound_error("4*I1 - 2*I2 below -1e-10");
    return v;
}

} // namespace tanglekit

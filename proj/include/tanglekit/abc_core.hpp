#pragma once
#include <utility>

#include "tanglekit/qstate.hpp"

namespace tanglekit {

// (A,B,C) two-qubit-invariant triple. B is stored unhalved (the D000+-D001
// combination itself); I1 carries the matching 1/2 weight.
struct invariant_triple {
    cplx a, b, c;
};

// action of the one-parameter local unitary u_of_x(x) on a triple
invariant_triple transform(const invariant_triple& t, cplx x);

double i1(const invariant_triple& t); // |A|^2 + |B|^2/2 + |C|^2, invariant
double i2(const invariant_triple& t); // |B^2 - 4AC|, invariant

// both roots x0 with transform(t, x0).a = 0; throws degenerate_c_error if
// |C| < 1e-12 (caller retries after a generic transform, or treats the
// triple as already reduced when A ~ 0 too)
std::pair<cplx, cplx> x0_root(const invariant_triple& t);

// 4*I1 - 2*I2, the upper bound on the squared two-tangle
double tau_upper(const invariant_triple& t);

} // namespace tanglekit

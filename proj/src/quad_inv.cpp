#include "tanglekit/quad_inv.hpp"

#include <cmath>

#include "tanglekit/errors.hpp"

namespace tanglekit {

invariant_triple row_triple(const pure_state& state, int row, int i)
{
    if (state.n != 4) throw dimension_error("row_triple expects a 4-qubit state");
    if (row < 1 || row > 6 || i < 0 || i > 1) throw bad_row_error("row_triple: bad row/index");
    font_set4 f = fonts4(state);
    switch (row) {
    case 1: // N_{A4,i}
        return {f.d2_12[0][i], f.d3_s4[0][i] + f.d3_s4[1][i], f.d2_12[1][i]};
    case 2: // M_{A3}
        return {f.d3_s3[0][0] + f.d3_s3[1][0],
                f.d4[0][0] + f.d4[0][1] + f.d4[1][0] + f.d4[1][1],
                f.d3_s3[0][1] + f.d3_s3[1][1]};
    case 3: // N_{A2,i}
        return {f.d2_13[i][0], f.d3_s2[0][i] + f.d3_s2[1][i], f.d2_13[i][1]};
    case 4: // M_{A4}
        return {f.d3_s4[0][0] - f.d3_s4[1][0],
                f.d4[0][0] + f.d4[0][1] - f.d4[1][0] - f.d4[1][1],
                f.d3_s4[0][1] - f.d3_s4[1][1]};
    case 5: // N_{A3,i}
        return {f.d2_14[0][i], f.d3_s3[0][i] - f.d3_s3[1][i], f.d2_14[1][i]};
    default: // M_{A2}
        return {f.d3_s2[0][0] - f.d3_s2[1][0],
                f.d4[0][0] + f.d4[1][0] - f.d4[0][1] - f.d4[1][1],
                f.d3_s2[0][1] - f.d3_s2[1][1]};
    }
}

namespace {

cplx disc(const invariant_triple& t) { return t.b * t.b - 4.0 * t.a * t.c; }

// degree-8 pair invariant built from one M row and the two matching N rows
cplx j_combination(const invariant_triple& m, const invariant_triple& n0,
                   const invariant_triple& n1)
{
    return disc(m) - 4.0 * n0.b * n1.b + 8.0 * (n0.c * n1.a + n0.a * n1.c);
}

} // namespace

quad_report quad_invariants(const pure_state& state)
{
    if (state.n != 4) throw dimension_error("quad_invariants expects a 4-qubit state");
    quad_report r;

    invariant_triple na4[2] = {row_triple(state, 1, 0), row_triple(state, 1, 1)};
    invariant_triple na2[2] = {row_triple(state, 3, 0), row_triple(state, 3, 1)};
    invariant_triple na3[2] = {row_triple(state, 5, 0), row_triple(state, 5, 1)};
    invariant_triple ma3 = row_triple(state, 2, 0);
    invariant_triple ma4 = row_triple(state, 4, 0);
    invariant_triple ma2 = row_triple(state, 6, 0);

    for (int i = 0; i < 2; ++i) {
        r.n_a4[i] = i1(na4[i]);
        r.n_a2[i] = i1(na2[i]);
        r.n_a3[i] = i1(na3[i]);
    }
    r.m_a3 = i1(ma3);
    r.m_a4 = i1(ma4);
    r.m_a2 = i1(ma2);

    r.i3new_a4 = disc(ma3);
    r.i3new_a2 = disc(ma4);
    r.i3new_a3 = disc(ma2);

    font_set4 f = fonts4(state);
    r.i42 = f.d4[0][0] - f.d4[1][0] - f.d4[0][1] + f.d4[1][1];
    r.tau0 = 2.0 * std::abs(r.i42);

    r.j12 = j_combination(ma3, na4[0], na4[1]);
    r.j13 = j_combination(ma4, na2[0], na2[1]);
    r.j14 = j_combination(ma2, na3[0], na3[1]);
    r.beta12 = (4.0 / 3.0) * std::abs(r.j12);
    r.beta13 = (4.0 / 3.0) * std::abs(r.j13);
    r.beta14 = (4.0 / 3.0) * std::abs(r.j14);

    const invariant_triple &n30 = na2[0], &n31 = na2[1], &m4 = ma4;
    r.i40 = disc(n30);
    r.i04 = disc(n31);
    r.i13 = 0.5 * n31.b * m4.b - (n31.c * m4.a + n31.a * m4.c);
    r.i31 = 0.5 * n30.b * m4.b - (n30.c * m4.a + n30.a * m4.c);
    r.i22 = (1.0 / 6.0) * m4.b * m4.b - (2.0 / 3.0) * m4.a * m4.c
            + (1.0 / 3.0) * n30.b * n31.b - (2.0 / 3.0) * (n30.c * n31.a + n30.a * n31.c);
    r.i48 = 3.0 * r.i22 * r.i22 - 4.0 * r.i31 * r.i13 + r.i40 * r.i04;
    r.tau4 = 16.0 * std::abs(12.0 * r.i48);
    r.n48 = 16.0
            * (6.0 * std::norm(r.i22) + 4.0 * std::norm(r.i31) + 4.0 * std::norm(r.i13)
               + std::norm(r.i40) + std::norm(r.i04));

    r.one_tangle = one_tangle(state, 1);
    double sum_n = r.n_a4[0] + r.n_a4[1] + r.n_a2[0] + r.n_a2[1] + r.n_a3[0] + r.n_a3[1];
    double sum_m = r.m_a3 + r.m_a4 + r.m_a2;
    r.decomp_lhs = r.one_tangle;
    r.decomp_rhs = 4.0 * sum_n + 2.0 * sum_m + 0.25 * r.tau0 * r.tau0;

    r.jsum_lhs = 4.0 * std::abs(r.j12 + r.j13 + r.j14);
    r.jsum_rhs = 3.0 * r.tau0 * r.tau0;
    return r;
}

std::pair<double, double> one_tangle_identity(const pure_state& state)
{
    quad_report r = quad_invariants(state);
    if (std::abs(r.decomp_lhs - r.decomp_rhs) > 1e-8)
        throw identity_violated_error("one-tangle decomposition identity violated");
    return {r.decomp_lhs, r.decomp_rhs};
}

cplx i42(const pure_state& state)
{
    font_set4 f = fonts4(state);
    return f.d4[0][0] - f.d4[1][0] - f.d4[0][1] + f.d4[1][1];
}

double tau0(const pure_state& state) { return 2.0 * std::abs(i42(state)); }

j_set j_invariants(const pure_state& state)
{
    quad_report r = quad_invariants(state);
    return {r.j12, r.j13, r.j14, r.beta12, r.beta13, r.beta14};
}

quartic_set graded_quartics(const pure_state& state)
{
    quad_report r = quad_invariants(state);
    return {r.i40, r.i31, r.i22, r.i13, r.i04};
}

double genuine_four_tangle(const pure_state& state) { return quad_invariants(state).tau4; }

double n48(const pure_state& state) { return quad_invariants(state).n48; }

} // namespace tanglekit

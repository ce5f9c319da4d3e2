#pragma once
#include <utility>

#include "tanglekit/abc_core.hpp"
#include "tanglekit/fonts.hpp"
#include "tanglekit/qstate.hpp"

namespace tanglekit {

// (A,B,C) rows for a 4-qubit pure state, numbered
//   1: N_{A4,i}   2: M_{A3}   3: N_{A2,i}   4: M_{A4}   5: N_{A3,i}   6: M_{A2}
// i in {0,1} selects the spectator value for the N rows and is ignored
// for the M rows
invariant_triple row_triple(const pure_state& state, int row, int i);

struct quad_report {
    // I1 values of the six row families
    double n_a4[2] = {0, 0};
    double n_a2[2] = {0, 0};
    double n_a3[2] = {0, 0};
    double m_a3 = 0, m_a4 = 0, m_a2 = 0;

    // discriminants of the M rows
    cplx i3new_a4, i3new_a2, i3new_a3;

    cplx i42;        // degree-2 invariant
    double tau0 = 0; // 2|i42|

    cplx j12, j13, j14; // degree-8 pair invariants
    double beta12 = 0, beta13 = 0, beta14 = 0; // (4/3)|J|

    // degree-(4,0)..(0,4) family and the degree-48 combination
    cplx i40, i04, i31, i13, i22, i48;
    double tau4 = 0; // 16|12 i48|
    double n48 = 0;  // companion positive combination, 1/6 on GHZ

    double one_tangle = 0;
    double decomp_lhs = 0, decomp_rhs = 0;   // one-tangle decomposition
    double jsum_lhs = 0, jsum_rhs = 0;   // 4|J12+J13+J14| vs 3 tau0^2
};

quad_report quad_invariants(const pure_state& state);

// returns (tau_1|234, 4*sum N + 2*sum M + tau0^2/4); throws
// identity_violated_error if they disagree beyond 1e-8
std::pair<double, double> one_tangle_identity(const pure_state& state);

// alternating sum of the 4-way determinants, and 2|i42|
cplx i42(const pure_state& state);
double tau0(const pure_state& state);

struct j_set {
    cplx j12, j13, j14;
    double beta12 = 0, beta13 = 0, beta14 = 0; // (4/3)|J|
};
j_set j_invariants(const pure_state& state);

// degree-4 invariants of the A1A3A4 triple, graded by antisymmetrization
// count: [0] = (4,0), [1] = (3,1), [2] = (2,2), [3] = (1,3), [4] = (0,4)
struct quartic_set {
    cplx i40, i31, i22, i13, i04;
};
quartic_set graded_quartics(const pure_state& state);

double genuine_four_tangle(const pure_state& state); // 16|12 I48|
double n48(const pure_state& state); // three-plus-four-way correlation of A1A3A4

} // namespace tanglekit

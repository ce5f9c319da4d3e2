#pragma once
#include "tanglekit/qstate.hpp"

namespace tanglekit {

// Determinants of negativity fonts for focus qubit 1 of a 4-qubit state:
// the 2x2 amplitude determinants every invariant downstream is assembled
// from. dK_* = K-way determinant (K qubit indices flip between the two
// products). Suffix names the flipped pair (d2) or the fixed spectator (d3).
struct font_set4 {
    cplx d2_12[2][2]; // [i3][i4]  D^{00}_{(A3)i3 (A4)i4}   flips qubits 1,2
    cplx d2_13[2][2]; // [i2][i4]  D^{00}_{(A2)i2 (A4)i4}   flips qubits 1,3
    cplx d2_14[2][2]; // [i2][i3]  D^{00}_{(A2)i2 (A3)i3}   flips qubits 1,4
    cplx d3_s4[2][2]; // [i3][i4]  D^{00 i3}_{(A4)i4}       flips 1,2,3
    cplx d3_s3[2][2]; // [i4][i3]  D^{00 i4}_{(A3)i3}       flips 1,2,4
    cplx d3_s2[2][2]; // [i4][i2]  D^{00 i4}_{(A2)i2}       flips 1,3,4
    cplx d4[2][2];    // [i3][i4]  D^{00 i3 i4}             flips all four
};

// 3-qubit analog: two 2-way groups and the 3-way pair.
struct font_set3 {
    cplx d2_12[2]; // [i3]  D^{00}_{(A3)i3}  flips qubits 1,2
    cplx d2_13[2]; // [i2]  D^{00}_{(A2)i2}  flips qubits 1,3
    cplx d3[2];    // [i3]  D^{00 i3}        flips all three
};

font_set4 fonts4(const pure_state& state); // requires n = 4
font_set3 fonts3(const pure_state& state); // requires n = 3

// 4 * sum of |D|^2 over all 28 determinants; equals the one-tangle
double one_tangle_font_sum(const font_set4& f);
// 3-qubit analog over the 6 determinants
double one_tangle_font_sum(const font_set3& f);

} // namespace tanglekit

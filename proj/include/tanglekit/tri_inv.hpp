#pragma once
#include <optional>

#include "tanglekit/abc_core.hpp"
#include "tanglekit/fonts.hpp"
#include "tanglekit/qstate.hpp"

namespace tanglekit {

enum class tri_pair { a1a2, a1a3 };

// (A,B,C) invariant rows for a 3-qubit pure state:
//   a1a2 row: (D^{00}_{(A3)0}, D^{000}+D^{001}, D^{00}_{(A3)1})
//   a1a3 row: (D^{00}_{(A2)0}, D^{000}-D^{001}, D^{00}_{(A2)1})
invariant_triple pair_triple(const pure_state& state, tri_pair pair);

cplx i34_value(const pure_state& state);      // B^2 - 4AC of the a1a2 row
double three_tangle_pure(const pure_state& state); // 4|I_{3,4}|

cplx t12_value(const pure_state& state); // D^{000} + D^{001}
cplx t13_value(const pure_state& state); // D^{000} - D^{001}

struct tri_report {
    double n_a2 = 0, n_a3 = 0;       // I1 of the a1a3 / a1a2 rows
    cplx i34;                        // degree-4 invariant
    double three_tangle = 0;         // 4|i34|
    cplx t12, t13;
    double two_tangle_12 = 0;        // concurrence of rho_12
    double two_tangle_13 = 0;        // concurrence of rho_13
    double one_tangle = 0;           // 4 det(rho_1)
    double dc = 0;                   // distance from the reduced five-term form
    double j0 = 0;
};

tri_report ckw_report(const pure_state& state);

struct canonical_result {
    pure_state state;      // <= 5 nonzero amplitudes on {000,001,011,101,111}
    local_unitary u1, u2, u3;
    bool already_canonical = false;
};

// reduce to the five-term local-basis form: a qubit-3 root kills
// D^{00}_{(A3)0}, then the SVD of the i3=0 coefficient slice aligns
// qubits 1 and 2
canonical_result canonical_form(const pure_state& state);

// closed-form qubit-3 root that zeroes T12, with up to 8 seeded random
// pre-rotations when the root denominator degenerates; nullopt when it
// degenerates persistently (the whole GHZ-class orbit does)
std::optional<local_unitary> t12_kill_root(const pure_state& state, std::uint64_t seed);

// always-succeeding version: closed-form root first, then a deterministic
// two-stage algebraic construction (kill A, then solve |B(x)| = 0)
local_unitary zero_T12_unitary(const pure_state& state);

double dc_distance(const pure_state& state); // tau3 - 4|T12|^2, via the printed font form
double j0_value(const pure_state& state);

} // namespace tanglekit

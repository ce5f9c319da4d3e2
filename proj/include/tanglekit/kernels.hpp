#pragma once
#include <cstdint>
#include <limits>
#include <vector>

#include "tanglekit/monogamy.hpp"
#include "tanglekit/qstate.hpp"
#include "tanglekit/roof.hpp"

namespace tanglekit {

// batched random-state suites and the family sweep. Each has a plain
// serial form (reference) and an OpenMP form; both give bit-identical
// results because per-item work is seeded independently and reductions
// are exact (max/min only).

struct quad_identity_stats {
    int count = 0;
    double max_font_sum = 0;  // one-tangle vs 4 sum |D|^2
    double max_decomp = 0;      // one-tangle decomposition
    double max_jsum = 0;      // 4|sum J| vs 3 tau0^2
    double max_pair_sym = 0;  // |J_pair| vs |J_complement|
    double max_i48_perm = 0;  // |I48| across all qubit relabelings
};
quad_identity_stats quad_identities_for(const pure_state& psi); // single state, count = 1
quad_identity_stats random_quad_identities_serial(int count, std::uint64_t seed);
quad_identity_stats random_quad_identities(int count, std::uint64_t seed, bool parallel = true);

struct tri_suite_stats {
    int count = 0;
    double max_two_form = 0;   // discriminant agreement between the two rows
    double max_sat_12 = 0;     // 4 N_A3 vs C12^2 + tau3/2
    double max_sat_13 = 0;     // 4 N_A2 vs C13^2 + tau3/2
    double max_ckw = 0;        // tau1 vs C12^2 + C13^2 + tau3
    double min_chain = std::numeric_limits<double>::infinity(); // min of tau3 - 4|T12|^2 (signed)
    int chain_violations = 0;  // count below -1e-9
    int max_nonzeros = 0;      // canonical-form support size
    double max_t_equal = 0;    // |16|T12|^2 - 16|T13|^2| on canonical states
    double max_t16_tau = 0;    // |16|T12|^2 - tau3| on canonical states
    double max_t4_tau = 0;     // |4|T12|^2 - tau3| on canonical states
    double max_compose = 0;    // ||U2 U1 U3 psi - canonical||
};
tri_suite_stats tri_suite_for(const pure_state& psi); // single state, count = 1
tri_suite_stats random_tri_suite_serial(int count, std::uint64_t seed);
tri_suite_stats random_tri_suite(int count, std::uint64_t seed, bool parallel = true);

struct abc_suite_stats {
    int count = 0;
    double max_i1_dev = 0;     // I1 drift under random transform
    double max_i2_dev = 0;     // I2 drift under random transform
    double max_root_resid = 0; // |A(x0)| on both closed-form branches
    double min_grid_margin = std::numeric_limits<double>::infinity(); // min over x grid of 2(|A|+|C|) - sqrt(bound)
};
abc_suite_stats random_abc_suite_serial(int count, std::uint64_t seed);
abc_suite_stats random_abc_suite(int count, std::uint64_t seed, bool parallel = true);

std::vector<sweep_row> sweep_family_serial(double a_min, double a_max, int steps, int focus,
                                           const roof_options& opts);
std::vector<sweep_row> sweep_family(double a_min, double a_max, int steps, int focus,
                                    const roof_options& opts, bool parallel = true);

} // namespace tanglekit

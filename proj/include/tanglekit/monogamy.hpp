#pragma once
#include <string>
#include <vector>

#include "tanglekit/qstate.hpp"
#include "tanglekit/quad_inv.hpp"
#include "tanglekit/roof.hpp"

namespace tanglekit {

// full per-state monogamy report for one focus qubit
struct tangle_report {
    int focus = 1;
    double one_tangle = 0;

    double two_tangles_sq[3] = {0, 0, 0};      // [tau_{1|p}]^2, p = 2,3,4
    double three_tangle_roofs[3] = {0, 0, 0};  // tau_{1|2|3}, tau_{1|2|4}, tau_{1|3|4}

    // residual two-tangles for pairs 1|2, 1|3, 1|4; `new_two_tangles`
    // takes each from the marginal named in the monogamy relation,
    // `new_two_tangles_alt` from the other marginal containing the pair
    double new_two_tangles[3] = {0, 0, 0};
    double new_two_tangles_alt[3] = {0, 0, 0};

    double tau0 = 0;
    double genuine_four_tangle = 0;
    double betas[3] = {0, 0, 0};

    double delta = 0;   // full monogamy residual
    double delta1 = 0;  // CKW-extension residual
    double delta2 = 0;  // 3/2-power residual
    double delta_lower_bound = 0; // quarter-beta + quarter-tau0^2 + half-sqrt-four-tangle
    bool delta_lb_applicable = false; // sum of beta products above threshold

    bool roofs_converged = true;

    // inequality verdicts, slack = lhs - rhs of the stated inequality
    bool delta_nonneg = false;
    bool delta1_nonneg = false;
    bool delta2_nonneg = false;
    bool lb_below_delta = false; // delta_lower_bound <= delta + 1e-6 (when applicable)
    double lb_slack = 0;
};

tangle_report report(const pure_state& state, int focus, const roof_options& opts = {});

// ((a+b)/2)(|0000>+|1111>) + ((a-b)/2)(|0011>+|1100>) + c(|0101>+|1010>) + |0110>
pure_state family_g2(double a, cplx b, cplx c); // throws zero_state_error at zero norm
pure_state family_g2ia(double a);               // the b = c = ia section

// closed-form values on the b = c = ia section, q = 4a^2 + 1
struct family_point {
    double a = 0;
    double one_tangle = 0;          // (8a^2 + 16a^4) / q^2
    double tau0 = 0;                // 2a^2 / q
    double three_tangle = 0;        // 8a^3 / q^2 (each 1|p|q alike)
    double delta_lower_bound = 0;   // 6a^4 / q^2
    double genuine_four_tangle = 0; // 0
    double new_two_tangle = 0;      // 0
};
family_point family_reference(double a);

// named states: ghz4, phi, psi, ghz3, w3, g2(<a>)
pure_state catalog(const std::string& name); // throws unknown_state_error

struct sweep_row {
    double a = 0;
    tangle_report rep;
    family_point ref;
    double two_sq_sum = 0;      // numeric Wootters values, shared by both pipelines
    double ref_delta = 0;       // one_tangle - two_sq_sum - (3/2) ref three-tangle
    double ref_delta1 = 0;      // one_tangle - two_sq_sum - 3 ref three-tangle
    double ref_delta2 = 0;      // one_tangle - two_sq_sum - 3 ref three-tangle^(3/2)
};

sweep_row sweep_point(double a, int focus, const roof_options& opts);

std::string sweep_csv_header();
std::string sweep_csv_row(const sweep_row& row); // 12 significant digits

} // namespace tanglekit

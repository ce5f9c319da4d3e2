#pragma once
#include <cstdint>
#include <vector>

#include "tanglekit/qstate.hpp"

namespace tanglekit {

// two-qubit concurrence, spin-flip eigenvalue formula (evaluated through
// an SVD of L^T (sy (x) sy) L with rho = L L^dag, which is numerically
// exact near saturation)
double concurrence(const density_matrix& rho);

struct roof_options {
    int ensemble_len = 0;       // 0 -> 2 * rank, capped at 8
    int restarts = 32;
    int max_iterations = 2000;  // pattern-search sweeps per restart
    double tol = 1e-8;          // terminal step size
    std::uint64_t seed = 0;
};

struct ensemble {
    std::vector<double> weights;       // p_i, sums to 1
    std::vector<pure_state> members;   // normalized |phi_i>
};

// decomposition members Phi_i = sum_k V_ik sqrt(lambda_k) |e_k> with V an
// L x r column-orthonormal matrix built from Givens rotations and phases
int stiefel_param_count(int len, int rank);
Eigen::MatrixXcd stiefel_matrix(const std::vector<double>& params, int len, int rank);
ensemble ensemble_from_isometry(const density_matrix& rho, const std::vector<double>& params,
                                int len); // throws rank_too_large_error if len < rank

// squared minimum of the ensemble-averaged square-root three-tangle;
// upper-bound estimate, deterministic for a fixed seed
double three_tangle_roof(const density_matrix& rho, const roof_options& opts = {},
                         bool* converged = nullptr);

// minimum ensemble average of 2|T| for the selected partner label
// (2 -> T12, 3 -> T13).  Rank-1 input: value in the spectator gauge that
// zeroes T (vanishes on pure projectors).  Rank-2 input: also evaluates
// the two-branch common-unitary construction (branches whose root
// degenerates persistently are skipped) and returns the smaller value.
double new_two_tangle_roof(const density_matrix& rho, int partner,
                           const roof_options& opts = {}, bool* converged = nullptr);

} // namespace tanglekit

#pragma once
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tanglekit/errors.hpp"

namespace tanglekit {

using cplx = std::complex<double>;

// Pure n-qubit state, n in {2,3,4}. Amplitude index = sum_m i_m 2^(n-m),
// i.e. qubit 1 is the most significant bit. Stored normalized; the norm of
// the raw input is kept for diagnostics (family states are written
// unnormalized in closed form).
struct pure_state {
    int n = 0;
    Eigen::VectorXcd amps;
    double input_norm = 1.0;

    cplx a(int i1, int i2) const { return amps[2 * i1 + i2]; }
    cplx a(int i1, int i2, int i3) const { return amps[4 * i1 + 2 * i2 + i3]; }
    cplx a(int i1, int i2, int i3, int i4) const { return amps[8 * i1 + 4 * i2 + 2 * i3 + i4]; }
};

// Reduced state over 1..3 qubits; hermitian, unit trace, psd.
struct density_matrix {
    int n = 0;
    Eigen::MatrixXcd mat;
};

struct local_unitary {
    int target = 1; // 1-based qubit index
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
};

pure_state make_pure(const Eigen::VectorXcd& amps, int n);

// keep: ascending 1-based qubit indices, nonempty proper subset
density_matrix partial_trace(const pure_state& state, const std::vector<int>& keep);

density_matrix projector(const pure_state& state); // |psi><psi|

pure_state apply_local_unitary(const pure_state& state, const local_unitary& u);

// perm[m-1] = new position of qubit m (1-based bijection)
pure_state permute_qubits(const pure_state& state, const std::vector<int>& perm);

double one_tangle(const pure_state& state, int focus);

pure_state random_state(int n, std::uint64_t seed);

// (1/sqrt(1+|x|^2)) [[1, -conj(x)], [x, 1]] on the given qubit; the
// one-parameter unitary every kill/reduction step in the library uses
local_unitary u_of_x(cplx x, int target);

// checks hermiticity/trace/psd within the documented tolerances, throws error
void validate_density(const density_matrix& rho);

// text format: '#' comment lines, data lines "<bitstring> <re> <im>";
// omitted bitstrings are zero, n inferred from bitstring length
pure_state load_state_text(std::istream& in);
pure_state load_state_file(const std::string& path); // io_error if unreadable

} // namespace tanglekit

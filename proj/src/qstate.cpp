#include "tanglekit/qstate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tanglekit/rng.hpp"

namespace tanglekit {

pure_state make_pure(const Eigen::VectorXcd& amps, int n) {
    if (n < 2 || n > 4) throw dimension_error("qubit count must be 2, 3 or 4");
    if (amps.size() != (1 << n)) throw bad_length_error("amplitude vector length != 2^n");
    const double nrm = amps.norm();
    if (nrm < 1e-14) throw zero_state_error("state has zero norm");
    pure_state s;
    s.n = n;
    s.amps = amps / nrm;
    s.input_norm = nrm;
    return s;
}

static int bit_of(int idx, int n, int qubit) { return (idx >> (n - qubit)) & 1; }

density_matrix partial_trace(const pure_state& state, const std::vector<int>& keep) {
    const int n = state.n;
    if (keep.empty() || static_cast<int>(keep.size()) >= n)
        throw bad_subset_error("keep set must be a nonempty proper subset");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > n) throw bad_subset_error("keep qubit out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw bad_subset_error("keep set must be ascending");
    }
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const int k = static_cast<int>(keep.size());
    const int dk = 1 << k, dt = 1 << (n - k);
    // index assembled by scattering kept/traced bits back to their positions
    auto full_index = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        for (int j = 0; j < k; ++j)
            idx |= ((kept_bits >> (k - 1 - j)) & 1) << (n - keep[j]);
        for (int j = 0; j < n - k; ++j)
            idx |= ((traced_bits >> (n - k - 1 - j)) & 1) << (n - traced[j]);
        return idx;
    };

    density_matrix rho;
    rho.n = k;
    rho.mat = Eigen::MatrixXcd::Zero(dk, dk);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c) {
            cplx acc = 0.0;
            for (int t = 0; t < dt; ++t)
                acc += state.amps[full_index(r, t)] * std::conj(state.amps[full_index(c, t)]);
            rho.mat(r, c) = acc;
        }
    return rho;
}

density_matrix projector(const pure_state& state) {
    density_matrix rho;
    rho.n = state.n;
    rho.mat = state.amps * state.amps.adjoint();
    return rho;
}

pure_state apply_local_unitary(const pure_state& state, const local_unitary& lu) {
    const int n = state.n;
    if (lu.target < 1 || lu.target > n) throw dimension_error("unitary target out of range");
    const Eigen::Matrix2cd d = lu.u.adjoint() * lu.u - Eigen::Matrix2cd::Identity();
    if (d.cwiseAbs().maxCoeff() > 1e-12) throw error("matrix is not unitary within 1e-12");

    pure_state out = state;
    const int stride = 1 << (n - lu.target);
    for (int idx = 0; idx < (1 << n); ++idx) {
        if (idx & stride) continue; // visit each (|0>,|1>) pair once
        const cplx a0 = state.amps[idx], a1 = state.amps[idx | stride];
        out.amps[idx] = lu.u(0, 0) * a0 + lu.u(0, 1) * a1;
        out.amps[idx | stride] = lu.u(1, 0) * a0 + lu.u(1, 1) * a1;
    }
    return out;
}

pure_state permute_qubits(const pure_state& state, const std::vector<int>& perm) {
    const int n = state.n;
    if (static_cast<int>(perm.size()) != n) throw bad_permutation_error("permutation length != n");
    std::vector<bool> seen(n + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p]) throw bad_permutation_error("not a bijection on 1..n");
        seen[p] = true;
    }
    pure_state out = state;
    for (int i = 0; i < (1 << n); ++i) {
        int j = 0;
        for (int m = 1; m <= n; ++m) j |= bit_of(i, n, m) << (n - perm[m - 1]);
        out.amps[j] = state.amps[i];
    }
    return out;
}

double one_tangle(const pure_state& state, int focus) {
    if (state.n < 3) throw dimension_error("one_tangle defined for 3 or 4 qubits");
    if (focus < 1 || focus > state.n) throw dimension_error("focus qubit out of range");
    const density_matrix rho = partial_trace(state, {focus});
    const cplx det = rho.mat(0, 0) * rho.mat(1, 1) - rho.mat(0, 1) * rho.mat(1, 0);
    return 4.0 * det.real();
}

pure_state random_state(int n, std::uint64_t seed) {
    if (n < 2 || n > 4) throw dimension_error("qubit count must be 2, 3 or 4");
    gaussian_stream g(seed);
    Eigen::VectorXcd v(1 << n);
    for (int i = 0; i < v.size(); ++i) v[i] = g.cgauss();
    return make_pure(v, n);
}

local_unitary u_of_x(cplx x, int target) {
    local_unitary lu;
    lu.target = target;
    const double s = std::sqrt(1.0 + std::norm(x));
    lu.u << 1.0 / s, -std::conj(x) / s, x / s, 1.0 / s;
    return lu;
}

void validate_density(const density_matrix& rho) {
    if (rho.n < 1 || rho.n > 3) throw dimension_error("density matrix spans 1..3 qubits");
    if (rho.mat.rows() != (1 << rho.n) || rho.mat.cols() != (1 << rho.n))
        throw bad_length_error("density matrix dimension != 2^n");
    if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw error("density matrix not hermitian within 1e-10");
    if (std::abs(rho.mat.trace().real() - 1.0) > 1e-10 || std::abs(rho.mat.trace().imag()) > 1e-10)
        throw error("density matrix trace != 1 within 1e-10");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw error("density matrix has eigenvalue below -1e-10");
}

pure_state load_state_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = 0;
    std::vector<std::pair<int, cplx>> entries;
    std::vector<bool> filled;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string bits, tre, tim, extra;
        if (!(ls >> bits >> tre >> tim)) throw parse_error(line_no, "expected <bitstring> <re> <im>");
        if (ls >> extra) throw parse_error(line_no, "trailing tokens after <bitstring> <re> <im>");
        for (char c : bits)
            if (c != '0' && c != '1') throw parse_error(line_no, "bitstring must contain only 0/1");
        const int len = static_cast<int>(bits.size());
        if (n == 0) {
            if (len < 2 || len > 4)
                throw dimension_error("line " + std::to_string(line_no) +
                                      ": bitstring length must be 2, 3 or 4");
            n = len;
            filled.assign(std::size_t(1) << n, false);
        } else if (len != n) {
            throw parse_error(line_no, "bitstring length differs from earlier lines");
        }
        double re, im;
        try {
            std::size_t pos = 0;
            re = std::stod(tre, &pos);
            if (pos != tre.size()) throw std::invalid_argument("re");
            im = std::stod(tim, &pos);
            if (pos != tim.size()) throw std::invalid_argument("im");
        } catch (const std::exception&) {
            throw parse_error(line_no, "amplitude is not a valid number");
        }
        int idx = 0;
        for (char c : bits) idx = (idx << 1) | (c - '0');
        if (filled[idx]) throw parse_error(line_no, "duplicate bitstring " + bits);
        filled[idx] = true;
        entries.emplace_back(idx, cplx(re, im));
    }
    if (n == 0) throw parse_error(0, "no data lines in state file");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << n);
    for (const auto& [idx, a] : entries) v[idx] = a;
    return make_pure(v, n);
}

pure_state load_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open state file: " + path);
    return load_state_text(f);
}

} // namespace tanglekit

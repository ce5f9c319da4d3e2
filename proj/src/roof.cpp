#include "tanglekit/roof.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>

#include "tanglekit/errors.hpp"
#include "tanglekit/rng.hpp"
#include "tanglekit/tri_inv.hpp"

namespace tanglekit {

double concurrence(const density_matrix& rho)
{
    if (rho.n != 2) throw dimension_error("concurrence expects a 2-qubit density matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXcd l = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();

    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero(); // sigma_y (x) sigma_y
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    Eigen::MatrixXcd m = l.transpose() * yy * l;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd s = svd.singularValues(); // descending
    double c = s[0];
    for (int i = 1; i < s.size(); ++i) c -= s[i];
    return std::max(0.0, c);
}

int stiefel_param_count(int len, int rank)
{
    return rank + 2 * (rank * (len - 1) - rank * (rank - 1) / 2);
}

Eigen::MatrixXcd stiefel_matrix(const std::vector<double>& params, int len, int rank)
{
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(len, rank);
    for (int k = 0; k < rank; ++k) v(k, k) = std::polar(1.0, params[k]);
    size_t p = rank;
    for (int k = 0; k < rank; ++k) {
        for (int j = k + 1; j < len; ++j) {
            double th = params[p], ph = params[p + 1];
            p += 2;
            double c = std::cos(th), s = std::sin(th);
            cplx e = std::polar(1.0, ph);
            // left-multiply by the plane rotation acting on rows k and j
            Eigen::RowVectorXcd rk = v.row(k), rj = v.row(j);
            v.row(k) = c * rk - std::conj(e) * s * rj;
            v.row(j) = e * s * rk + c * rj;
        }
    }
    return v;
}

namespace {

// spectral factor of rho: columns sqrt(lambda_k) |e_k| for lambda > cutoff
Eigen::MatrixXcd eigen_basis(const Eigen::MatrixXcd& rho, double cutoff = 1e-12)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    std::vector<int> keep;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > cutoff) keep.push_back(i);
    Eigen::MatrixXcd b(rho.rows(), static_cast<int>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k)
        b.col(static_cast<int>(k)) =
            es.eigenvectors().col(keep[k]) * std::sqrt(es.eigenvalues()[keep[k]]);
    return b;
}

// unnormalized two-determinant combinations of a raw 3-qubit vector;
// index layout 4*i1 + 2*i2 + i3
cplx w3_raw(const Eigen::VectorXcd& a, int i3)
{
    return a[i3] * a[6 + (i3 ^ 1)] - a[4 + i3] * a[2 + (i3 ^ 1)];
}

cplx d2_12_raw(const Eigen::VectorXcd& a, int i3)
{
    return a[i3] * a[6 + i3] - a[4 + i3] * a[2 + i3];
}

cplx t12_raw(const Eigen::VectorXcd& a) { return w3_raw(a, 0) + w3_raw(a, 1); }

cplx i34_raw(const Eigen::VectorXcd& a)
{
    cplx b = t12_raw(a);
    return b * b - 4.0 * d2_12_raw(a, 0) * d2_12_raw(a, 1);
}

Eigen::VectorXcd apply_u3_raw(const Eigen::VectorXcd& a, const Eigen::Matrix2cd& u)
{
    Eigen::VectorXcd out(8);
    for (int base = 0; base < 8; base += 2) {
        out[base] = u(0, 0) * a[base] + u(0, 1) * a[base + 1];
        out[base + 1] = u(1, 0) * a[base] + u(1, 1) * a[base + 1];
    }
    return out;
}

// coordinate pattern search with shrinking step; first improvement is
// accepted within a sweep, the step halves after a sweep with none
double pattern_search(std::vector<double>& x, const std::function<double(const std::vector<double>&)>& f,
                      int max_sweeps, double tol, bool* converged)
{
    double fx = f(x);
    double step = 0.5;
    int sweep = 0;
    while (step >= tol && sweep < max_sweeps) {
        bool improved = false;
        for (size_t i = 0; i < x.size(); ++i) {
            for (double d : {step, -step}) {
                double old = x[i];
                x[i] = old + d;
                double fn = f(x);
                if (fn < fx) {
                    fx = fn;
                    improved = true;
                    break;
                }
                x[i] = old;
            }
        }
        ++sweep;
        if (!improved) step *= 0.5;
    }
    if (converged) *converged = step < tol;
    return fx;
}

// minimize the sum of member_term over ensemble members drawn from the
// decomposition freedom of the given spectral basis
double minimize_decompositions(const Eigen::MatrixXcd& basis, int len, const roof_options& opts,
                               const std::function<double(const Eigen::VectorXcd&)>& member_term,
                               bool* converged)
{
    const int rank = static_cast<int>(basis.cols());
    const int np = stiefel_param_count(len, rank);
    const Eigen::MatrixXcd bt = basis.transpose();

    auto objective = [&](const std::vector<double>& p) {
        Eigen::MatrixXcd members = stiefel_matrix(p, len, rank) * bt; // rows are members
        double total = 0;
        for (int i = 0; i < len; ++i) total += member_term(members.row(i).transpose());
        return total;
    };

    std::vector<double> values(opts.restarts);
    std::vector<char> flags(opts.restarts);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < opts.restarts; ++t) {
        gaussian_stream g(mix_seed(opts.seed, static_cast<std::uint64_t>(t)));
        std::vector<double> x(np);
        for (int i = 0; i < np; ++i) x[i] = (2.0 * g.uniform() - 1.0) * M_PI;
        bool conv = false;
        values[t] = pattern_search(x, objective, opts.max_iterations, opts.tol, &conv);
        flags[t] = conv ? 1 : 0;
    }
    int best = 0;
    for (int t = 1; t < opts.restarts; ++t)
        if (values[t] < values[best]) best = t;
    if (converged) *converged = flags[best] != 0;
    return values[best];
}

int effective_len(const roof_options& opts, int rank)
{
    if (opts.ensemble_len > 0) {
        if (opts.ensemble_len < rank)
            throw rank_too_large_error("ensemble length below the state rank");
        return opts.ensemble_len;
    }
    return std::min(2 * rank, 8);
}

} // namespace

ensemble ensemble_from_isometry(const density_matrix& rho, const std::vector<double>& params,
                                int len)
{
    Eigen::MatrixXcd basis = eigen_basis(rho.mat);
    const int rank = static_cast<int>(basis.cols());
    if (len < rank) throw rank_too_large_error("ensemble length below the state rank");
    if (static_cast<int>(params.size()) != stiefel_param_count(len, rank))
        throw rank_too_large_error("parameter vector length mismatch");
    Eigen::MatrixXcd members = stiefel_matrix(params, len, rank) * basis.transpose();
    ensemble e;
    for (int i = 0; i < len; ++i) {
        Eigen::VectorXcd phi = members.row(i).transpose();
        double w = phi.squaredNorm();
        e.weights.push_back(w);
        if (w > 1e-30) phi /= std::sqrt(w);
        e.members.push_back(make_pure(phi, rho.n));
    }
    return e;
}

double three_tangle_roof(const density_matrix& rho, const roof_options& opts, bool* converged)
{
    if (rho.n != 3) throw dimension_error("three_tangle_roof expects a 3-qubit density matrix");
    validate_density(rho);
    Eigen::MatrixXcd basis = eigen_basis(rho.mat);
    int len = effective_len(opts, static_cast<int>(basis.cols()));
    double best = minimize_decompositions(
        basis, len, opts, [](const Eigen::VectorXcd& m) { return 2.0 * std::sqrt(std::abs(i34_raw(m))); },
        converged);
    return best * best;
}

double new_two_tangle_roof(const density_matrix& rho, int partner, const roof_options& opts,
                           bool* converged)
{
    if (rho.n != 3) throw dimension_error("new_two_tangle_roof expects a 3-qubit density matrix");
    if (partner != 2 && partner != 3) throw dimension_error("partner label must be 2 or 3");
    validate_density(rho);

    Eigen::MatrixXcd basis = eigen_basis(rho.mat);
    const int rank = static_cast<int>(basis.cols());

    // reduce the partner-3 case to the partner-2 one by swapping the two
    // spectator qubit positions in every basis column
    if (partner == 3) {
        std::vector<int> perm = {1, 3, 2};
        for (int k = 0; k < rank; ++k) {
            pure_state col = make_pure(basis.col(k), 3);
            double scale = col.input_norm;
            basis.col(k) = permute_qubits(col, perm).amps * scale;
        }
    }

    if (rank == 1) {
        // pure projector: the spectator gauge that zeroes T is reachable,
        // so the value is the (tiny) kill residual
        pure_state psi = make_pure(basis.col(0), 3);
        local_unitary u = zero_T12_unitary(psi);
        if (converged) *converged = true;
        return 2.0 * std::abs(t12_raw(apply_u3_raw(basis.col(0), u.u)));
    }

    int len = effective_len(opts, rank);
    double general = minimize_decompositions(
        basis, len, opts, [](const Eigen::VectorXcd& m) { return 2.0 * std::abs(t12_raw(m)); },
        converged);

    double best = general;
    if (rank == 2) {
        // two-branch construction: rotate both spectral members by the
        // unitary that zeroes one member's T, take the better branch
        for (int kill = 0; kill < 2; ++kill) {
            pure_state branch = make_pure(basis.col(kill), 3);
            auto u = t12_kill_root(branch, mix_seed(opts.seed, 0xe93300u + kill));
            if (!u) continue; // persistently degenerate root: branch undefined
            double v = 2.0
                       * (std::abs(t12_raw(apply_u3_raw(basis.col(0), u->u)))
                          + std::abs(t12_raw(apply_u3_raw(basis.col(1), u->u))));
            if (v < best) best = v;
        }
    }
    return best;
}

} // namespace tanglekit

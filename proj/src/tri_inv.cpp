#include "tanglekit/tri_inv.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "tanglekit/errors.hpp"
#include "tanglekit/rng.hpp"
#include "tanglekit/roof.hpp"

namespace tanglekit {

invariant_triple pair_triple(const pure_state& state, tri_pair pair)
{
    if (state.n != 3) throw dimension_error("pair_triple expects a 3-qubit state");
    font_set3 f = fonts3(state);
    if (pair == tri_pair::a1a2)
        return {f.d2_12[0], f.d3[0] + f.d3[1], f.d2_12[1]};
    return {f.d2_13[0], f.d3[0] - f.d3[1], f.d2_13[1]};
}

cplx i34_value(const pure_state& state)
{
    invariant_triple t = pair_triple(state, tri_pair::a1a2);
    return t.b * t.b - 4.0 * t.a * t.c;
}

double three_tangle_pure(const pure_state& state)
{
    return 4.0 * std::abs(i34_value(state));
}

cplx t12_value(const pure_state& state)
{
    font_set3 f = fonts3(state);
    return f.d3[0] + f.d3[1];
}

cplx t13_value(const pure_state& state)
{
    font_set3 f = fonts3(state);
    return f.d3[0] - f.d3[1];
}

tri_report ckw_report(const pure_state& state)
{
    if (state.n != 3) throw dimension_error("ckw_report expects a 3-qubit state");
    tri_report r;
    invariant_triple r12 = pair_triple(state, tri_pair::a1a2);
    invariant_triple r13 = pair_triple(state, tri_pair::a1a3);
    r.n_a3 = i1(r12);
    r.n_a2 = i1(r13);
    r.i34 = r12.b * r12.b - 4.0 * r12.a * r12.c;
    r.three_tangle = 4.0 * std::abs(r.i34);
    r.t12 = r12.b;
    r.t13 = r13.b;
    r.two_tangle_12 = concurrence(partial_trace(state, {1, 2}));
    r.two_tangle_13 = concurrence(partial_trace(state, {1, 3}));
    r.one_tangle = one_tangle(state, 1);
    double c12sq = r.two_tangle_12 * r.two_tangle_12;
    r.dc = 8.0 * std::norm(r12.a) + 8.0 * std::norm(r12.c) - 2.0 * c12sq;
    r.j0 = c12sq * (c12sq + r.three_tangle);
    return r;
}

namespace {

// smaller-|x| root of A - x B + x^2 C = 0 (conjugated, ready for u_of_x)
cplx smaller_conj_root(const invariant_triple& t)
{
    auto roots = x0_root(t);
    return std::abs(roots.first) <= std::abs(roots.second) ? roots.first : roots.second;
}

pure_state apply_q3(const pure_state& s, const local_unitary& u)
{
    return apply_local_unitary(s, u);
}

} // namespace

canonical_result canonical_form(const pure_state& state)
{
    if (state.n != 3) throw dimension_error("canonical_form expects a 3-qubit state");
    const double eps = 1e-12;

    invariant_triple row = pair_triple(state, tri_pair::a1a2);

    local_unitary ident(3, Eigen::Matrix2cd::Identity());
    if (std::abs(row.a) < eps && std::abs(state.a(0, 1, 0)) < 1e-10
        && std::abs(state.a(1, 0, 0)) < 1e-10 && std::abs(state.a(1, 1, 0)) < 1e-10) {
        canonical_result res{state, local_unitary(1, Eigen::Matrix2cd::Identity()),
                             local_unitary(2, Eigen::Matrix2cd::Identity()), ident, true};
        return res;
    }

    local_unitary u3 = ident;
    if (std::abs(row.a) >= eps) {
        if (std::abs(row.c) >= eps) {
            u3 = u_of_x(smaller_conj_root(row), 3);
        } else {
            Eigen::Matrix2cd flip;
            flip << 0, 1, 1, 0;
            u3 = local_unitary(3, flip);
        }
    }
    pure_state p1 = apply_q3(state, u3);

    Eigen::Matrix2cd slice;
    slice << p1.a(0, 0, 0), p1.a(0, 1, 0), p1.a(1, 0, 0), p1.a(1, 1, 0);

    local_unitary u1(1, Eigen::Matrix2cd::Identity());
    local_unitary u2(2, Eigen::Matrix2cd::Identity());
    if (slice.norm() > 1e-12) {
        Eigen::JacobiSVD<Eigen::Matrix2cd> svd(slice, Eigen::ComputeFullU | Eigen::ComputeFullV);
        u1 = local_unitary(1, Eigen::Matrix2cd(svd.matrixU().adjoint()));
        u2 = local_unitary(2, Eigen::Matrix2cd(svd.matrixV().transpose()));
    }
    pure_state pc = apply_local_unitary(apply_local_unitary(p1, u1), u2);
    return {pc, u1, u2, u3, false};
}

std::optional<local_unitary> t12_kill_root(const pure_state& state, std::uint64_t seed)
{
    if (state.n != 3) throw dimension_error("t12_kill_root expects a 3-qubit state");
    gaussian_stream g(seed);
    pure_state cur = state;
    Eigen::Matrix2cd pre = Eigen::Matrix2cd::Identity();

    for (int attempt = 0; attempt < 8; ++attempt) {
        invariant_triple t = pair_triple(cur, tri_pair::a1a2);
        if (std::abs(t.b) < 1e-12) return local_unitary(3, pre); // already zero
        double i1v = i1(t);
        double i2v = i2(t);
        double j0 = std::max(16.0 * i1v * i1v - 4.0 * i2v * i2v, 0.0);
        cplx den = t.c * std::conj(t.b) + std::conj(t.a) * t.b;
        if (std::abs(den) > 1e-12) {
            double base = std::norm(t.a) - std::norm(t.c);
            double best = -1.0;
            Eigen::Matrix2cd best_u;
            for (double sgn : {1.0, -1.0}) {
                cplx xs = (base + sgn * 0.25 * std::sqrt(j0)) / den;
                local_unitary u = u_of_x(std::conj(xs), 3);
                double resid = std::abs(t12_value(apply_q3(cur, u)));
                if (best < 0 || resid < best) {
                    best = resid;
                    best_u = u.u;
                }
            }
            return local_unitary(3, Eigen::Matrix2cd(best_u * pre));
        }
        // denominator degenerate: random pre-rotation and retry
        local_unitary r = u_of_x(g.cgauss(), 3);
        cur = apply_q3(cur, r);
        pre = r.u * pre;
    }
    return std::nullopt;
}

local_unitary zero_T12_unitary(const pure_state& state)
{
    if (state.n != 3) throw dimension_error("zero_T12_unitary expects a 3-qubit state");
    const double tol = 1e-9;

    if (std::abs(t12_value(state)) < 1e-12)
        return local_unitary(3, Eigen::Matrix2cd::Identity());

    if (auto u = t12_kill_root(state, 0x7a12be11u)) {
        if (std::abs(t12_value(apply_q3(state, *u))) < tol) return *u;
    }

    // algebraic fallback: kill A first, then rotate the phase of x to
    // solve |B(x)| = 0 in the A = 0 gauge
    invariant_triple row = pair_triple(state, tri_pair::a1a2);
    local_unitary ua(3, Eigen::Matrix2cd::Identity());
    if (std::abs(row.a) >= 1e-14) {
        if (std::abs(row.c) >= 1e-14) {
            ua = u_of_x(smaller_conj_root(row), 3);
        } else {
            Eigen::Matrix2cd flip;
            flip << 0, 1, 1, 0;
            ua = local_unitary(3, flip);
        }
    }
    pure_state s1 = apply_q3(state, ua);
    invariant_triple r1 = pair_triple(s1, tri_pair::a1a2);

    double best = std::abs(r1.b);
    Eigen::Matrix2cd best_u = ua.u;
    auto consider = [&](cplx x) {
        local_unitary ub = u_of_x(x, 3);
        Eigen::Matrix2cd total = ub.u * ua.u;
        double resid = std::abs(t12_value(apply_q3(state, local_unitary(3, total))));
        if (resid < best) {
            best = resid;
            best_u = total;
        }
    };
    if (std::abs(r1.b) >= 1e-12) {
        if (std::abs(r1.c) < 1e-14) {
            consider(cplx(1, 0));
            consider(cplx(-1, 0));
            consider(cplx(0, 1));
            consider(cplx(0, -1));
        } else {
            double tt = (-std::abs(r1.c) + std::hypot(std::abs(r1.c), std::abs(r1.b)))
                        / std::abs(r1.b);
            cplx ph = r1.b * std::conj(r1.c) / (std::abs(r1.b) * std::abs(r1.c));
            consider(tt * ph);
            consider(-tt * ph);
            consider(tt * std::conj(ph));
            consider(-tt * std::conj(ph));
        }
    }
    if (best < tol) return local_unitary(3, best_u);
    throw degenerate_denominator_error("zero_T12_unitary: no root found after retries");
}

double dc_distance(const pure_state& state)
{
    return ckw_report(state).dc;
}

double j0_value(const pure_state& state)
{
    return ckw_report(state).j0;
}

} // namespace tanglekit

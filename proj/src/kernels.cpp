#include "tanglekit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tanglekit/abc_core.hpp"
#include "tanglekit/fonts.hpp"
#include "tanglekit/quad_inv.hpp"
#include "tanglekit/rng.hpp"
#include "tanglekit/tri_inv.hpp"

namespace tanglekit {

namespace {

struct quad_item {
    double font_sum = 0, decomp = 0, jsum = 0, pair_sym = 0, i48_perm = 0;
};

quad_item quad_item_of(const pure_state& psi)
{
    quad_report q = quad_invariants(psi);
    quad_item it;
    it.font_sum = std::abs(one_tangle_font_sum(fonts4(psi)) - q.one_tangle);
    it.decomp = std::abs(q.decomp_lhs - q.decomp_rhs);
    it.jsum = std::abs(q.jsum_lhs - q.jsum_rhs);

    // each pair invariant matches its complementary pair in modulus
    const std::vector<int> comp34 = {3, 4, 1, 2}, comp24 = {3, 1, 4, 2}, comp23 = {3, 1, 2, 4};
    double j34 = std::abs(quad_invariants(permute_qubits(psi, comp34)).j12);
    double j24 = std::abs(quad_invariants(permute_qubits(psi, comp24)).j12);
    double j23 = std::abs(quad_invariants(permute_qubits(psi, comp23)).j12);
    it.pair_sym = std::max({std::abs(std::abs(q.j12) - j34), std::abs(std::abs(q.j13) - j24),
                            std::abs(std::abs(q.j14) - j23)});

    double base = std::abs(q.i48);
    std::vector<int> perm = {1, 2, 3, 4};
    do {
        double v = std::abs(quad_invariants(permute_qubits(psi, perm)).i48);
        it.i48_perm = std::max(it.i48_perm, std::abs(v - base));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return it;
}

quad_item quad_item_at(std::uint64_t seed, int i)
{
    return quad_item_of(random_state(4, mix_seed(seed, static_cast<std::uint64_t>(i))));
}

void fold(quad_identity_stats& s, const quad_item& it)
{
    s.max_font_sum = std::max(s.max_font_sum, it.font_sum);
    s.max_decomp = std::max(s.max_decomp, it.decomp);
    s.max_jsum = std::max(s.max_jsum, it.jsum);
    s.max_pair_sym = std::max(s.max_pair_sym, it.pair_sym);
    s.max_i48_perm = std::max(s.max_i48_perm, it.i48_perm);
}

struct tri_item {
    double two_form = 0, sat12 = 0, sat13 = 0, ckw = 0, chain = 0;
    int nonzeros = 0;
    double t_equal = 0, t16_tau = 0, t4_tau = 0, compose = 0;
};

tri_item tri_item_of(const pure_state& psi)
{
    tri_report r = ckw_report(psi);
    invariant_triple r13 = pair_triple(psi, tri_pair::a1a3);
    cplx disc13 = r13.b * r13.b - 4.0 * r13.a * r13.c;

    tri_item it;
    it.two_form = std::abs(r.i34 - disc13);
    double c12sq = r.two_tangle_12 * r.two_tangle_12;
    double c13sq = r.two_tangle_13 * r.two_tangle_13;
    it.sat12 = std::abs(4.0 * r.n_a3 - (c12sq + 0.5 * r.three_tangle));
    it.sat13 = std::abs(4.0 * r.n_a2 - (c13sq + 0.5 * r.three_tangle));
    it.ckw = std::abs(r.one_tangle - (c12sq + c13sq + r.three_tangle));
    it.chain = r.three_tangle - 4.0 * std::norm(r.t12);

    canonical_result c = canonical_form(psi);
    for (int k = 0; k < 8; ++k)
        if (std::abs(c.state.amps[k]) > 1e-9) ++it.nonzeros;
    double t12sq16 = 16.0 * std::norm(t12_value(c.state));
    double t13sq16 = 16.0 * std::norm(t13_value(c.state));
    it.t_equal = std::abs(t12sq16 - t13sq16);
    it.t16_tau = std::abs(t12sq16 - r.three_tangle);
    it.t4_tau = std::abs(0.25 * t12sq16 - r.three_tangle);
    pure_state comp =
        apply_local_unitary(apply_local_unitary(apply_local_unitary(psi, c.u3), c.u1), c.u2);
    it.compose = (comp.amps - c.state.amps).norm();
    return it;
}

tri_item tri_item_at(std::uint64_t seed, int i)
{
    return tri_item_of(random_state(3, mix_seed(seed, static_cast<std::uint64_t>(i))));
}

void fold(tri_suite_stats& s, const tri_item& it)
{
    s.max_two_form = std::max(s.max_two_form, it.two_form);
    s.max_sat_12 = std::max(s.max_sat_12, it.sat12);
    s.max_sat_13 = std::max(s.max_sat_13, it.sat13);
    s.max_ckw = std::max(s.max_ckw, it.ckw);
    s.min_chain = std::min(s.min_chain, it.chain);
    if (it.chain < -1e-9) ++s.chain_violations;
    s.max_nonzeros = std::max(s.max_nonzeros, it.nonzeros);
    s.max_t_equal = std::max(s.max_t_equal, it.t_equal);
    s.max_t16_tau = std::max(s.max_t16_tau, it.t16_tau);
    s.max_t4_tau = std::max(s.max_t4_tau, it.t4_tau);
    s.max_compose = std::max(s.max_compose, it.compose);
}

struct abc_item {
    double i1_dev = 0, i2_dev = 0, root_resid = 0, grid_margin = 0;
};

abc_item abc_item_at(std::uint64_t seed, int i)
{
    gaussian_stream g(mix_seed(seed, static_cast<std::uint64_t>(i)));
    invariant_triple t{g.cgauss(), g.cgauss(), g.cgauss()};
    cplx x = g.cgauss();
    invariant_triple tx = transform(t, x);

    abc_item it;
    it.i1_dev = std::abs(i1(tx) - i1(t));
    it.i2_dev = std::abs(i2(tx) - i2(t));
    if (std::abs(t.c) >= 1e-12) {
        auto roots = x0_root(t);
        it.root_resid = std::max(std::abs(transform(t, roots.first).a),
                                 std::abs(transform(t, roots.second).a));
    }

    double bound = std::sqrt(std::max(0.0, tau_upper(t)));
    double lo = std::numeric_limits<double>::infinity();
    const double radii[] = {0.0, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0};
    for (double r : radii) {
        for (int k = 0; k < 24; ++k) {
            cplx xx = std::polar(r, 2.0 * M_PI * k / 24.0);
            invariant_triple tt = transform(t, xx);
            lo = std::min(lo, 2.0 * (std::abs(tt.a) + std::abs(tt.c)));
            if (r == 0.0) break; // angle is irrelevant at the origin
        }
    }
    it.grid_margin = lo - bound;
    return it;
}

void fold(abc_suite_stats& s, const abc_item& it)
{
    s.max_i1_dev = std::max(s.max_i1_dev, it.i1_dev);
    s.max_i2_dev = std::max(s.max_i2_dev, it.i2_dev);
    s.max_root_resid = std::max(s.max_root_resid, it.root_resid);
    s.min_grid_margin = std::min(s.min_grid_margin, it.grid_margin);
}

template <typename Stats, typename Item>
Stats run_serial(int count, std::uint64_t seed, Item item)
{
    Stats s;
    s.count = count;
    for (int i = 0; i < count; ++i) fold(s, item(seed, i));
    return s;
}

template <typename Stats, typename Item>
Stats run_parallel(int count, std::uint64_t seed, Item item)
{
    using item_t = decltype(item(seed, 0));
    std::vector<item_t> items(count);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) items[i] = item(seed, i);
    Stats s;
    s.count = count;
    for (int i = 0; i < count; ++i) fold(s, items[i]);
    return s;
}

} // namespace

quad_identity_stats quad_identities_for(const pure_state& psi)
{
    quad_identity_stats s;
    s.count = 1;
    fold(s, quad_item_of(psi));
    return s;
}

quad_identity_stats random_quad_identities_serial(int count, std::uint64_t seed)
{
    return run_serial<quad_identity_stats>(count, seed, quad_item_at);
}

quad_identity_stats random_quad_identities(int count, std::uint64_t seed, bool parallel)
{
    if (!parallel) return random_quad_identities_serial(count, seed);
    return run_parallel<quad_identity_stats>(count, seed, quad_item_at);
}

tri_suite_stats tri_suite_for(const pure_state& psi)
{
    tri_suite_stats s;
    s.count = 1;
    fold(s, tri_item_of(psi));
    return s;
}

tri_suite_stats random_tri_suite_serial(int count, std::uint64_t seed)
{
    return run_serial<tri_suite_stats>(count, seed, tri_item_at);
}

tri_suite_stats random_tri_suite(int count, std::uint64_t seed, bool parallel)
{
    if (!parallel) return random_tri_suite_serial(count, seed);
    return run_parallel<tri_suite_stats>(count, seed, tri_item_at);
}

abc_suite_stats random_abc_suite_serial(int count, std::uint64_t seed)
{
    return run_serial<abc_suite_stats>(count, seed, abc_item_at);
}

abc_suite_stats random_abc_suite(int count, std::uint64_t seed, bool parallel)
{
    if (!parallel) return random_abc_suite_serial(count, seed);
    return run_parallel<abc_suite_stats>(count, seed, abc_item_at);
}

std::vector<sweep_row> sweep_family_serial(double a_min, double a_max, int steps, int focus,
                                           const roof_options& opts)
{
    std::vector<sweep_row> rows(steps);
    double step = steps > 1 ? (a_max - a_min) / (steps - 1) : 0.0;
    for (int i = 0; i < steps; ++i) {
        roof_options o = opts;
        o.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(i));
        rows[i] = sweep_point(a_min + step * i, focus, o);
    }
    return rows;
}

std::vector<sweep_row> sweep_family(double a_min, double a_max, int steps, int focus,
                                    const roof_options& opts, bool parallel)
{
    if (!parallel) return sweep_family_serial(a_min, a_max, steps, focus, opts);
    std::vector<sweep_row> rows(steps);
    double step = steps > 1 ? (a_max - a_min) / (steps - 1) : 0.0;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < steps; ++i) {
        roof_options o = opts;
        o.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(i));
        rows[i] = sweep_point(a_min + step * i, focus, o);
    }
    return rows;
}

} // namespace tanglekit

#include "tanglekit/monogamy.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tanglekit/errors.hpp"
#include "tanglekit/rng.hpp"

namespace tanglekit {

namespace {

roof_options with_seed(const roof_options& opts, std::uint64_t slot)
{
    roof_options o = opts;
    o.seed = mix_seed(opts.seed, slot);
    return o;
}

} // namespace

tangle_report report(const pure_state& state, int focus, const roof_options& opts)
{
    if (state.n != 4) throw dimension_error("report expects a 4-qubit state");
    if (focus < 1 || focus > 4) throw dimension_error("focus qubit out of range");

    pure_state p = state;
    if (focus != 1) {
        std::vector<int> perm(4);
        int pos = 2;
        for (int m = 1; m <= 4; ++m) perm[m - 1] = (m == focus) ? 1 : pos++;
        p = permute_qubits(state, perm);
    }

    tangle_report r;
    r.focus = focus;

    quad_report q = quad_invariants(p);
    r.one_tangle = q.one_tangle;
    r.tau0 = q.tau0;
    r.genuine_four_tangle = q.tau4;
    r.betas[0] = q.beta12;
    r.betas[1] = q.beta13;
    r.betas[2] = q.beta14;

    for (int i = 0; i < 3; ++i) {
        double c = concurrence(partial_trace(p, {1, 2 + i}));
        r.two_tangles_sq[i] = c * c;
    }

    density_matrix rho123 = partial_trace(p, {1, 2, 3});
    density_matrix rho124 = partial_trace(p, {1, 2, 4});
    density_matrix rho134 = partial_trace(p, {1, 3, 4});

    bool conv = true, ok = true;
    r.three_tangle_roofs[0] = three_tangle_roof(rho123, with_seed(opts, 1), &ok);
    conv = conv && ok;
    r.three_tangle_roofs[1] = three_tangle_roof(rho124, with_seed(opts, 2), &ok);
    conv = conv && ok;
    r.three_tangle_roofs[2] = three_tangle_roof(rho134, with_seed(opts, 3), &ok);
    conv = conv && ok;

    // monogamy-relation marginal assignment
    r.new_two_tangles[0] = new_two_tangle_roof(rho123, 2, with_seed(opts, 4), &ok);
    conv = conv && ok;
    r.new_two_tangles[1] = new_two_tangle_roof(rho134, 2, with_seed(opts, 5), &ok);
    conv = conv && ok;
    r.new_two_tangles[2] = new_two_tangle_roof(rho124, 3, with_seed(opts, 6), &ok);
    conv = conv && ok;

    // alternate assignment: the other marginal containing each pair
    r.new_two_tangles_alt[0] = new_two_tangle_roof(rho124, 2, with_seed(opts, 7), &ok);
    conv = conv && ok;
    r.new_two_tangles_alt[1] = new_two_tangle_roof(rho123, 3, with_seed(opts, 8), &ok);
    conv = conv && ok;
    r.new_two_tangles_alt[2] = new_two_tangle_roof(rho134, 3, with_seed(opts, 9), &ok);
    conv = conv && ok;
    r.roofs_converged = conv;

    double two_sum = r.two_tangles_sq[0] + r.two_tangles_sq[1] + r.two_tangles_sq[2];
    double roof_sum =
        r.three_tangle_roofs[0] + r.three_tangle_roofs[1] + r.three_tangle_roofs[2];
    double new_sq_sum = 0, roof_32_sum = 0;
    for (int i = 0; i < 3; ++i) {
        new_sq_sum += r.new_two_tangles[i] * r.new_two_tangles[i];
        roof_32_sum += std::pow(r.three_tangle_roofs[i], 1.5);
    }

    r.delta = r.one_tangle - two_sum - 0.5 * roof_sum - 0.5 * new_sq_sum;
    r.delta1 = r.one_tangle - two_sum - roof_sum;
    r.delta2 = r.one_tangle - two_sum - roof_32_sum;

    double beta_products =
        r.betas[0] * r.betas[1] + r.betas[0] * r.betas[2] + r.betas[1] * r.betas[2];
    r.delta_lb_applicable = beta_products > 1e-10;
    r.delta_lower_bound = 0.25 * (r.betas[0] + r.betas[1] + r.betas[2])
                          + 0.25 * r.tau0 * r.tau0 + 0.5 * std::sqrt(r.genuine_four_tangle);

    r.delta_nonneg = r.delta >= -1e-6;
    r.delta1_nonneg = r.delta1 >= -1e-6;
    r.delta2_nonneg = r.delta2 >= -1e-6;
    r.lb_slack = r.delta - r.delta_lower_bound;
    r.lb_below_delta = !r.delta_lb_applicable || r.delta_lower_bound <= r.delta + 1e-6;
    return r;
}

pure_state family_g2(double a, cplx b, cplx c)
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    cplx plus = (a + b) / 2.0, minus = (a - b) / 2.0;
    v[0b0000] = plus;
    v[0b1111] = plus;
    v[0b0011] = minus;
    v[0b1100] = minus;
    v[0b0101] = c;
    v[0b1010] = c;
    v[0b0110] = 1.0;
    if (v.norm() < 1e-14) throw zero_state_error("family state has zero norm");
    return make_pure(v, 4);
}

pure_state family_g2ia(double a) { return family_g2(a, cplx(0, a), cplx(0, a)); }

family_point family_reference(double a)
{
    family_point f;
    f.a = a;
    double q = 4 * a * a + 1;
    f.one_tangle = (8 * a * a + 16 * a * a * a * a) / (q * q);
    f.tau0 = 2 * a * a / q;
    f.three_tangle = 8 * a * a * a / (q * q);
    f.delta_lower_bound = 6 * a * a * a * a / (q * q);
    f.genuine_four_tangle = 0;
    f.new_two_tangle = 0;
    return f;
}

pure_state catalog(const std::string& name)
{
    auto mk = [](int n, std::initializer_list<std::pair<int, cplx>> entries) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << n);
        for (auto& e : entries) v[e.first] = e.second;
        return make_pure(v, n);
    };
    if (name == "ghz4") return mk(4, {{0b0000, 1.0}, {0b1111, 1.0}});
    if (name == "phi") return mk(4, {{0b1111, 1.0}, {0b1100, 1.0}, {0b0010, 1.0}, {0b0001, 1.0}});
    if (name == "psi") return mk(4, {{0b0000, 1.0}, {0b0101, 1.0}, {0b1000, 1.0}, {0b1110, 1.0}});
    if (name == "ghz3") return mk(3, {{0b000, 1.0}, {0b111, 1.0}});
    if (name == "w3") return mk(3, {{0b100, 1.0}, {0b010, 1.0}, {0b001, 1.0}});
    if (name.size() > 4 && name.rfind("g2(", 0) == 0 && name.back() == ')') {
        std::string num = name.substr(3, name.size() - 4);
        size_t used = 0;
        double a = 0;
        try {
            a = std::stod(num, &used);
        } catch (const std::exception&) {
            throw unknown_state_error("bad family parameter: " + num);
        }
        if (used != num.size()) throw unknown_state_error("bad family parameter: " + num);
        return family_g2ia(a);
    }
    throw unknown_state_error("unknown state name: " + name);
}

sweep_row sweep_point(double a, int focus, const roof_options& opts)
{
    sweep_row row;
    row.a = a;
    row.rep = report(family_g2ia(a), focus, opts);
    row.ref = family_reference(a);
    row.two_sq_sum = row.rep.two_tangles_sq[0] + row.rep.two_tangles_sq[1]
                     + row.rep.two_tangles_sq[2];
    double t1 = row.ref.one_tangle, t3 = row.ref.three_tangle;
    row.ref_delta = t1 - row.two_sq_sum - 1.5 * t3;
    row.ref_delta1 = t1 - row.two_sq_sum - 3.0 * t3;
    row.ref_delta2 = t1 - row.two_sq_sum - 3.0 * std::pow(t3, 1.5);
    return row;
}

std::string sweep_csv_header()
{
    return "a,one_tangle,tau0,four_tangle,two_sq_12,two_sq_13,two_sq_14,"
           "three_roof_123,three_roof_124,three_roof_134,"
           "new2_12,new2_13,new2_14,alt_new2_12,alt_new2_13,alt_new2_14,"
           "beta_12,beta_13,beta_14,delta,delta1,delta2,delta_lb,delta_lb_applicable,"
           "roofs_converged,ref_one_tangle,ref_tau0,ref_three_tangle,ref_delta_lb,"
           "ref_delta,ref_delta1,ref_delta2";
}

std::string sweep_csv_row(const sweep_row& row)
{
    std::ostringstream os;
    char buf[32];
    auto put = [&](double v, bool lead_comma = true) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        if (lead_comma) os << ',';
        os << buf;
    };
    const tangle_report& r = row.rep;
    put(row.a, false);
    put(r.one_tangle);
    put(r.tau0);
    put(r.genuine_four_tangle);
    for (double v : r.two_tangles_sq) put(v);
    for (double v : r.three_tangle_roofs) put(v);
    for (double v : r.new_two_tangles) put(v);
    for (double v : r.new_two_tangles_alt) put(v);
    for (double v : r.betas) put(v);
    put(r.delta);
    put(r.delta1);
    put(r.delta2);
    put(r.delta_lower_bound);
    os << ',' << (r.delta_lb_applicable ? 1 : 0) << ',' << (r.roofs_converged ? 1 : 0);
    put(row.ref.one_tangle);
    put(row.ref.tau0);
    put(row.ref.three_tangle);
    put(row.ref.delta_lower_bound);
    put(row.ref_delta);
    put(row.ref_delta1);
    put(row.ref_delta2);
    return os.str();
}

} // namespace tanglekit

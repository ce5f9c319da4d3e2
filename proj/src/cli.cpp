#include "tanglekit/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanglekit/acceptance.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/kernels.hpp"
#include "tanglekit/monogamy.hpp"
#include "tanglekit/roof.hpp"
#include "tanglekit/tri_inv.hpp"

namespace tanglekit {

namespace {

std::string fmt12(double v)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.12g", v);
    return b;
}

void put_line(std::ostream& out, const std::string& key, const std::string& val)
{
    char b[64];
    std::snprintf(b, sizeof b, "%-24s %s", key.c_str(), val.c_str());
    out << b << "\n";
}

std::uint64_t resolve_seed(bool has_flag, std::uint64_t flag_value)
{
    if (has_flag) return flag_value;
    if (const char* env = std::getenv("TANGLEKIT_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && end && *end == '\0') return v;
    }
    return 0;
}

const char* pair_names[3] = {"12", "13", "14"};
const char* marg_names[3] = {"123", "124", "134"};

nlohmann::json report_json(const tangle_report& r)
{
    nlohmann::json j;
    j["kind"] = "four_qubit_report";
    j["focus"] = r.focus;
    j["one_tangle"] = r.one_tangle;
    for (int i = 0; i < 3; ++i) {
        j["two_tangles_sq"][pair_names[i]] = r.two_tangles_sq[i];
        j["three_tangle_roofs"][marg_names[i]] = r.three_tangle_roofs[i];
        j["new_two_tangles"][pair_names[i]] = r.new_two_tangles[i];
        j["new_two_tangles_alt"][pair_names[i]] = r.new_two_tangles_alt[i];
        j["betas"][pair_names[i]] = r.betas[i];
    }
    j["tau0"] = r.tau0;
    j["genuine_four_tangle"] = r.genuine_four_tangle;
    j["delta"] = r.delta;
    j["delta1"] = r.delta1;
    j["delta2"] = r.delta2;
    j["delta_lower_bound"] = r.delta_lower_bound;
    j["delta_lb_applicable"] = r.delta_lb_applicable;
    j["roofs_converged"] = r.roofs_converged;
    j["verdicts"]["delta_nonneg"] = r.delta_nonneg;
    j["verdicts"]["delta1_nonneg"] = r.delta1_nonneg;
    j["verdicts"]["delta2_nonneg"] = r.delta2_nonneg;
    j["verdicts"]["lb_below_delta"] = r.lb_below_delta;
    j["verdicts"]["lb_slack"] = r.lb_slack;
    return j;
}

void report_text(std::ostream& out, const tangle_report& r)
{
    put_line(out, "focus", std::to_string(r.focus));
    put_line(out, "one_tangle", fmt12(r.one_tangle));
    for (int i = 0; i < 3; ++i)
        put_line(out, std::string("two_sq_") + pair_names[i], fmt12(r.two_tangles_sq[i]));
    for (int i = 0; i < 3; ++i)
        put_line(out, std::string("three_roof_") + marg_names[i] + " (upper bound)",
                 fmt12(r.three_tangle_roofs[i]));
    for (int i = 0; i < 3; ++i)
        put_line(out, std::string("new2_") + pair_names[i], fmt12(r.new_two_tangles[i]));
    for (int i = 0; i < 3; ++i)
        put_line(out, std::string("alt_new2_") + pair_names[i], fmt12(r.new_two_tangles_alt[i]));
    put_line(out, "tau0", fmt12(r.tau0));
    put_line(out, "genuine_four_tangle", fmt12(r.genuine_four_tangle));
    for (int i = 0; i < 3; ++i)
        put_line(out, std::string("beta_") + pair_names[i], fmt12(r.betas[i]));
    put_line(out, "delta", fmt12(r.delta));
    put_line(out, "delta1", fmt12(r.delta1));
    put_line(out, "delta2", fmt12(r.delta2));
    put_line(out, "delta_lb", fmt12(r.delta_lower_bound));
    put_line(out, "delta_lb_applicable", r.delta_lb_applicable ? "yes" : "no");
    put_line(out, "roofs_converged", r.roofs_converged ? "yes" : "no");
    put_line(out, "delta_nonneg", r.delta_nonneg ? "yes" : "no");
    put_line(out, "delta1_nonneg", r.delta1_nonneg ? "yes" : "no");
    put_line(out, "delta2_nonneg", r.delta2_nonneg ? "yes" : "no");
    put_line(out, "lb_below_delta", r.lb_below_delta ? "yes" : "no");
    put_line(out, "lb_slack", fmt12(r.lb_slack));
}

int do_eval(const std::string& path, int focus, std::uint64_t seed, int restarts, bool as_json,
            std::ostream& out)
{
    pure_state st = load_state_file(path);
    if (focus < 1 || focus > st.n) throw dimension_error("focus qubit out of range");

    if (st.n == 4) {
        roof_options opts;
        opts.seed = seed;
        opts.restarts = restarts;
        tangle_report r = report(st, focus, opts);
        if (as_json)
            out << report_json(r).dump(2) << "\n";
        else
            report_text(out, r);
        return 0;
    }
    if (st.n == 3) {
        pure_state p = st;
        if (focus != 1) {
            std::vector<int> perm(3);
            int pos = 2;
            for (int m = 1; m <= 3; ++m) perm[m - 1] = (m == focus) ? 1 : pos++;
            p = permute_qubits(st, perm);
        }
        tri_report r = ckw_report(p);
        if (as_json) {
            nlohmann::json j;
            j["kind"] = "three_qubit_report";
            j["focus"] = focus;
            j["one_tangle"] = r.one_tangle;
            j["n_a2"] = r.n_a2;
            j["n_a3"] = r.n_a3;
            j["i34_re"] = r.i34.real();
            j["i34_im"] = r.i34.imag();
            j["three_tangle"] = r.three_tangle;
            j["t12_abs"] = std::abs(r.t12);
            j["t13_abs"] = std::abs(r.t13);
            j["two_tangle_12"] = r.two_tangle_12;
            j["two_tangle_13"] = r.two_tangle_13;
            j["dc"] = r.dc;
            j["j0"] = r.j0;
            out << j.dump(2) << "\n";
        } else {
            put_line(out, "focus", std::to_string(focus));
            put_line(out, "one_tangle", fmt12(r.one_tangle));
            put_line(out, "n_a2", fmt12(r.n_a2));
            put_line(out, "n_a3", fmt12(r.n_a3));
            put_line(out, "three_tangle", fmt12(r.three_tangle));
            put_line(out, "t12_abs", fmt12(std::abs(r.t12)));
            put_line(out, "t13_abs", fmt12(std::abs(r.t13)));
            put_line(out, "two_tangle_12", fmt12(r.two_tangle_12));
            put_line(out, "two_tangle_13", fmt12(r.two_tangle_13));
            put_line(out, "dc", fmt12(r.dc));
            put_line(out, "j0", fmt12(r.j0));
        }
        return 0;
    }
    // two qubits: concurrence and 4 det(rho_focus)
    double c = concurrence(projector(st));
    density_matrix r1 = partial_trace(st, {focus});
    double t1 = 4.0 * (r1.mat(0, 0) * r1.mat(1, 1) - r1.mat(0, 1) * r1.mat(1, 0)).real();
    if (as_json) {
        nlohmann::json j;
        j["kind"] = "two_qubit_report";
        j["focus"] = focus;
        j["one_tangle"] = t1;
        j["concurrence"] = c;
        out << j.dump(2) << "\n";
    } else {
        put_line(out, "focus", std::to_string(focus));
        put_line(out, "one_tangle", fmt12(t1));
        put_line(out, "concurrence", fmt12(c));
    }
    return 0;
}

int do_sweep(double a_min, double a_max, int steps, const std::string& out_path,
             std::uint64_t seed, int restarts, std::ostream& out, std::ostream& err)
{
    if (a_min < 0 || a_max < a_min) {
        err << "error: need 0 <= min <= max\n";
        return 2;
    }
    if (steps < 2) {
        err << "error: need at least 2 steps\n";
        return 2;
    }
    roof_options opts;
    opts.seed = seed;
    opts.restarts = restarts;
    int eff = (a_max == a_min) ? 1 : steps;
    std::vector<sweep_row> rows = sweep_family(a_min, a_max, eff, 1, opts);

    std::ofstream f(out_path);
    if (!f) {
        err << "error: cannot open output file: " << out_path << "\n";
        return 4;
    }
    f << sweep_csv_header() << "\n";
    for (const sweep_row& r : rows) f << sweep_csv_row(r) << "\n";
    if (!f.good()) {
        err << "error: write failed: " << out_path << "\n";
        return 4;
    }
    out << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

struct identity_line {
    std::string name;
    double residual;
    double tol;
    bool min_side = false; // residual is a signed minimum, pass if >= -tol
};

int print_identities(const std::vector<identity_line>& lines, std::ostream& out, std::ostream& err)
{
    const identity_line* first_fail = nullptr;
    for (const identity_line& l : lines) {
        bool ok = l.min_side ? l.residual >= -l.tol : l.residual <= l.tol;
        char b[128];
        std::snprintf(b, sizeof b, "%-40s %s  %s%.3e", l.name.c_str(), ok ? "pass" : "FAIL",
                      l.min_side ? "min " : "max residual ", l.residual);
        out << b << "\n";
        if (!ok && !first_fail) first_fail = &l;
    }
    if (first_fail) {
        err << "identity failed: " << first_fail->name << "\n";
        return 5;
    }
    return 0;
}

int do_check(const std::string& path, int random_count, std::uint64_t seed, std::ostream& out,
             std::ostream& err)
{
    if (!path.empty()) {
        pure_state st = load_state_file(path);
        if (st.n == 4) {
            quad_identity_stats s = quad_identities_for(st);
            return print_identities(
                {{"one-tangle vs determinant-sum", s.max_font_sum, 1e-10},
                 {"one-tangle decomposition", s.max_decomp, 1e-10},
                 {"J-sum vs 3 tau0^2", s.max_jsum, 1e-9},
                 {"pair/complement |J| symmetry", s.max_pair_sym, 1e-9},
                 {"|I48| relabeling invariance", s.max_i48_perm, 1e-9}},
                out, err);
        }
        if (st.n == 3) {
            tri_suite_stats s = tri_suite_for(st);
            return print_identities({{"two-row discriminant agreement", s.max_two_form, 1e-12},
                                     {"4 N_A3 = C12^2 + tau3/2", s.max_sat_12, 1e-8},
                                     {"4 N_A2 = C13^2 + tau3/2", s.max_sat_13, 1e-8},
                                     {"tau1 = C12^2 + C13^2 + tau3", s.max_ckw, 1e-8}},
                                    out, err);
        }
        double c = concurrence(projector(st));
        out << "two-qubit state, concurrence " << fmt12(c) << "\n";
        return 0;
    }
    quad_identity_stats s = random_quad_identities(random_count, seed);
    out << "checked " << s.count << " random 4-qubit states\n";
    return print_identities({{"one-tangle vs determinant-sum", s.max_font_sum, 1e-10},
                             {"one-tangle decomposition", s.max_decomp, 1e-10},
                             {"J-sum vs 3 tau0^2", s.max_jsum, 1e-9},
                             {"pair/complement |J| symmetry", s.max_pair_sym, 1e-9},
                             {"|I48| relabeling invariance", s.max_i48_perm, 1e-9}},
                            out, err);
}

int do_selftest(std::ostream& out, std::ostream& err)
{
    int failures = 0;
    std::string first;
    for (const criterion_result& r : run_acceptance_all()) {
        out << "criterion " << r.index << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL")
            << "\n"
            << r.detail;
        if (!r.pass) {
            ++failures;
            if (first.empty()) first = r.name;
        }
    }
    if (failures) {
        err << "selftest: " << failures << " of 7 criteria failed, first: " << first << "\n";
        return 1;
    }
    out << "selftest: all 7 criteria passed\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"entanglement invariants and monogamy reports for 2-4 qubit pure states"};
    app.name("tanglekit");
    app.require_subcommand(1);

    std::string eval_state;
    int eval_focus = 1;
    std::uint64_t eval_seed = 0;
    int eval_restarts = 32;
    bool eval_json = false;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a state file and print its report");
    eval->add_option("--state", eval_state, "state file")->required();
    eval->add_option("--focus", eval_focus, "focus qubit (default 1)");
    CLI::Option* eval_seed_opt = eval->add_option("--seed", eval_seed, "optimizer seed");
    eval->add_option("--restarts", eval_restarts, "roof optimizer restarts (default 32)");
    eval->add_flag("--json", eval_json, "emit JSON instead of text");

    std::string sweep_family_name;
    double sweep_min = 0, sweep_max = 0;
    int sweep_steps = 0, sweep_restarts = 8;
    std::string sweep_out;
    std::uint64_t sweep_seed = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "family parameter sweep to CSV");
    sweep->add_option("--family", sweep_family_name, "family name (g2ia)")->required();
    sweep->add_option("--min", sweep_min, "first parameter value")->required();
    sweep->add_option("--max", sweep_max, "last parameter value")->required();
    sweep->add_option("--steps", sweep_steps, "grid size")->required();
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    CLI::Option* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "optimizer seed");
    sweep->add_option("--restarts", sweep_restarts, "roof optimizer restarts (default 8)");

    std::string check_state;
    int check_random = 0;
    std::uint64_t check_seed = 0;
    CLI::App* check = app.add_subcommand("check", "verify exact identities");
    CLI::Option* check_state_opt = check->add_option("--state", check_state, "state file");
    CLI::Option* check_random_opt =
        check->add_option("--random", check_random, "number of random 4-qubit states");
    CLI::Option* check_seed_opt = check->add_option("--seed", check_seed, "random-state seed");
    check_state_opt->excludes(check_random_opt);

    app.add_subcommand("selftest", "run the full acceptance suite");

    std::vector<std::string> full;
    full.push_back("tanglekit");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed())
            return do_eval(eval_state, eval_focus,
                           resolve_seed(eval_seed_opt->count() > 0, eval_seed), eval_restarts,
                           eval_json, out);
        if (sweep->parsed()) {
            if (sweep_family_name != "g2ia") {
                err << "error: unknown family: " << sweep_family_name << "\n";
                return 2;
            }
            return do_sweep(sweep_min, sweep_max, sweep_steps, sweep_out,
                            resolve_seed(sweep_seed_opt->count() > 0, sweep_seed), sweep_restarts,
                            out, err);
        }
        if (check->parsed()) {
            if (check_state_opt->count() == 0 && check_random_opt->count() == 0) {
                err << "error: check needs --state or --random\n";
                return 2;
            }
            return do_check(check_state, check_random,
                            resolve_seed(check_seed_opt->count() > 0, check_seed), out, err);
        }
        return do_selftest(out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const identity_violated_error& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tanglekit

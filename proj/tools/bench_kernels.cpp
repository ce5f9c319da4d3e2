// times the serial reference kernels against the OpenMP ones and checks that
// both produce the same fold results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "tanglekit/kernels.hpp"
#include "tanglekit/monogamy.hpp"

using namespace tanglekit;

namespace {

double time_ms(const std::function<void()>& fn)
{
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool same)
{
    std::printf("%-28s %10.1f ms %10.1f ms   speedup %5.2fx   match %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, same ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv)
{
    int n_states = argc > 1 ? std::atoi(argv[1]) : 4000;
    std::uint64_t seed = 0xbe7c4;

    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        quad_identity_stats a, b;
        double ts = time_ms([&] { a = random_quad_identities_serial(n_states, seed); });
        double tp = time_ms([&] { b = random_quad_identities(n_states, seed); });
        bool same = a.max_font_sum == b.max_font_sum && a.max_decomp == b.max_decomp &&
                    a.max_jsum == b.max_jsum && a.max_pair_sym == b.max_pair_sym &&
                    a.max_i48_perm == b.max_i48_perm;
        row("four-qubit identities", ts, tp, same);
    }
    {
        tri_suite_stats a, b;
        double ts = time_ms([&] { a = random_tri_suite_serial(n_states, seed); });
        double tp = time_ms([&] { b = random_tri_suite(n_states, seed); });
        bool same = a.max_two_form == b.max_two_form && a.max_ckw == b.max_ckw &&
                    a.min_chain == b.min_chain && a.max_compose == b.max_compose;
        row("three-qubit suite", ts, tp, same);
    }
    {
        abc_suite_stats a, b;
        double ts = time_ms([&] { a = random_abc_suite_serial(4 * n_states, seed); });
        double tp = time_ms([&] { b = random_abc_suite(4 * n_states, seed); });
        bool same = a.max_i1_dev == b.max_i1_dev && a.max_i2_dev == b.max_i2_dev &&
                    a.max_root_resid == b.max_root_resid && a.min_grid_margin == b.min_grid_margin;
        row("single-qubit transform suite", ts, tp, same);
    }
    {
        roof_options opts;
        opts.restarts = 8;
        opts.seed = 7;
        std::vector<sweep_row> a, b;
        double ts = time_ms([&] { a = sweep_family_serial(0.1, 2.0, 25, 1, opts); });
        double tp = time_ms([&] { b = sweep_family(0.1, 2.0, 25, 1, opts); });
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].rep.delta == b[i].rep.delta && a[i].rep.delta1 == b[i].rep.delta1 &&
                   a[i].rep.delta2 == b[i].rep.delta2;
        row("family sweep (25 points)", ts, tp, same);
    }
    return 0;
}

// release-gate driver: one criterion per invocation (argv[1] = 1..7) or all
// of them with no arguments; exit code is the number of failed criteria
#include <cstdio>
#include <cstdlib>
#include <string>

#include "tanglekit/acceptance.hpp"

int main(int argc, char** argv)
{
    using tanglekit::criterion_result;
    int failures = 0;
    auto show = [&](const criterion_result& r) {
        std::printf("criterion %d (%s): %s\n", r.index, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL");
        std::fputs(r.detail.c_str(), stdout);
        if (!r.pass) ++failures;
    };

    if (argc > 1) {
        int idx = std::atoi(argv[1]);
        if (idx < 1 || idx > 7) {
            std::fprintf(stderr, "usage: %s [criterion 1..7]\n", argv[0]);
            return 64;
        }
        show(tanglekit::run_acceptance_criterion(idx));
    } else {
        for (const criterion_result& r : tanglekit::run_acceptance_all()) show(r);
    }
    std::fflush(stdout);
    return failures;
}

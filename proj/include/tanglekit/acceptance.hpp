#pragma once
#include <string>
#include <vector>

namespace tanglekit {

// release-gate checks; each prints one summary line through `detail`
struct criterion_result {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

criterion_result run_acceptance_criterion(int index); // 1..7
std::vector<criterion_result> run_acceptance_all();

} // namespace tanglekit

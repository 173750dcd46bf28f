// Acceptance suite runner: one line per release criterion, nonzero exit on
// any failure. `ctest -R acceptance` runs this; the `verify` CLI command
// drives the same checks.

#include <cstring>
#include <iostream>

#include "superkg/acceptance.hpp"

int main(int argc, char** argv) {
    skg::acceptance::Options opt;
    for (int i = 1; i < argc - 1; ++i) {
        if (std::strcmp(argv[i], "--only") == 0) opt.only = argv[i + 1];
        if (std::strcmp(argv[i], "--tol-scale") == 0) opt.tol_scale = std::atof(argv[i + 1]);
    }

    const auto results = skg::acceptance::run_all(opt);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << skg::acceptance::format_line(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES present")
              << " (" << results.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

// The acceptance suite: every release criterion as a named check with a
// pinned tolerance. Backs both the `verify` CLI command and the ctest
// acceptance binary.

namespace skg::acceptance {

struct CheckResult {
    std::string name;
    double value = 0.0;  // measured error / residual / gap
    double tol = 0.0;    // threshold after scaling
    bool pass = false;
    std::string detail;
};

struct Options {
    double tol_scale = 1.0;  // multiplies every tolerance (forced-failure demo)
    std::string only;        // substring filter on check names; empty = all
    std::string scratch_dir; // where figure CSVs are written; empty = temp dir
};

std::vector<CheckResult> run_all(const Options& opt = {});

// One line per check: "PASS <name> value=<v> tol=<t>" or "FAIL ...".
std::string format_line(const CheckResult& r);

}  // namespace skg::acceptance

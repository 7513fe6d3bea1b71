// Acceptance gate: runs every verification suite and prints one PASS/FAIL
// line per criterion.  Exit code 0 only if everything passes.

#include <iostream>

#include "seqalg/checks.hpp"

int main() {
    std::size_t failed = 0, total = 0;
    for (const auto& r : seqalg::run_check_suite("all")) {
        ++total;
        if (r.passed) {
            std::cout << "PASS: " << r.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL: " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << (total - failed) << "/" << total << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

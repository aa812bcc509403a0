// Acceptance battery: one line per criterion, nonzero exit on any failure.
// All parameters are the pinned defaults of VerifyOptions.

#include <cstdio>

#include "normext/verify.hpp"

int main() {
    const normext::verify::VerifyOptions opts;
    const auto results = normext::verify::run_all_checks(opts, nullptr);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s %s (%s) [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}

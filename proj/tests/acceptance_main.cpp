// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "cobord/verify.hpp"

int main()
{
    const auto results = cobord::run_acceptance(0xc0b0bd15ull);
    bool pass = true;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("criterion %2d: %s  %s (%.1f s)\n", idx, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.ms / 1000.0);
        if (!r.detail.empty())
            std::printf("              %s\n", r.detail.c_str());
        pass = pass && r.pass;
    }
    std::printf("acceptance: %s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

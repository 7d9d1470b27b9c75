// Acceptance harness: one line per criterion, exit 0 iff all pass.
// Each criterion is a verification suite run at its pinned tolerances.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nliouville/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* summary;
    nliouville::verify::SuiteResult (*run)();
};

nliouville::verify::SuiteResult quantization_all() {
    return nliouville::verify::suite_quantization(0);
}
nliouville::verify::SuiteResult asymptotics_all() {
    return nliouville::verify::suite_asymptotics(0);
}

} // namespace

int main(int argc, char** argv) {
    using namespace nliouville::verify;
    const bool detail =
        argc > 1 && std::string(argv[1]) == "--detail";

    const std::vector<Criterion> criteria = {
        {1, "entire regular solution total mass = 8 pi (n=2), rel 1e-6",
         suite_entire_mass},
        {2, "solve+measure sweep: gamma, gamma_inf, total mass, rel 1e-3",
         quantization_all},
        {3, "n=2 root law gamma_inf = gamma + 8 pi, abs 1e-10, 200 points",
         suite_root_law},
        {4, "weighted family mass law and lambda invariance, rel 1e-6/1e-10",
         suite_theorem3},
        {5, "annulus identity rel 1e-5 and boundary limits rel 1e-3",
         suite_pohozaev},
        {6, "slope limits match the mass dictionary, Kelvin exchange exact",
         asymptotics_all},
        {7, "local fixed point contracts and matches RK to sup 1e-8",
         suite_picard},
        {8, "2D family: PDE residual 1e-4, mass 8 pi (a+1) rel 1e-3",
         suite_planar},
        {9, "negative controls: corrupted inputs fail the checkers",
         suite_negative_controls},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto sr = c.run();
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        const bool ok = sr.pass();
        all_pass = all_pass && ok;
        std::printf("criterion %d [%s]  %-62s (%zu checks, worst margin "
                    "%.2e, %.2fs)\n",
                    c.id, ok ? "pass" : "FAIL", c.summary, sr.checks.size(),
                    sr.worst_margin(), dt);
        if (detail || !ok) {
            for (const auto& ch : sr.checks)
                if (detail || !ch.pass)
                    std::printf("    [%s] %-60s residual=%.3e tol=%.0e\n",
                                ch.pass ? "pass" : "FAIL", ch.name.c_str(),
                                ch.residual, ch.tol);
        }
    }
    std::printf("acceptance: %s\n", all_pass ? "all criteria pass"
                                             : "FAILURES present");
    return all_pass ? 0 : 1;
}

// Acceptance gate: every catalog experiment at its default (acceptance)
// configuration, one pass/fail line per criterion, with the runtime
// budget enforced.  Exit status 0 only if all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hypflux/experiments.hpp"

namespace {

struct Criterion {
    const char* experiment;
    double budget_seconds;
};

// Canonical order; budgets are part of the criteria.
const std::vector<Criterion> kCriteria = {
    {"unruh-equivalence", 1.0},       {"flux-balance-stationary", 30.0},
    {"flux-balance-moving", 30.0},    {"integrand-cancellation", 1.0},
    {"gamma-kernel", 10.0},           {"delta-kernel", 60.0},
    {"force-thermalization", 10.0},   {"mode-sum-convergence", 60.0},
    {"commutator-support", 1.0},      {"retarded-time", 1.0},
};

} // namespace

int main() {
    bool all_pass = true;
    int index = 0;
    for (const auto& crit : kCriteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        hypflux::RunRecord rec;
        std::string error;
        try {
            rec = hypflux::run_experiment(
                hypflux::default_config(crit.experiment));
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();

        bool pass = error.empty() && rec.all_checks_pass();
        const bool in_budget = elapsed < crit.budget_seconds;
        pass = pass && in_budget;
        all_pass = all_pass && pass;

        std::string detail;
        if (!error.empty()) {
            detail = "error: " + error;
        } else {
            for (const auto& c : rec.checks) {
                if (!detail.empty()) detail += "; ";
                detail += c.name + (c.pass ? " ok" : " FAILED") + " (" +
                          c.detail + ")";
            }
            if (!in_budget) detail += "; OVER TIME BUDGET";
        }
        std::printf("criterion %02d %-26s %s  [%6.2f s / budget %5.1f s]\n",
                    index, crit.experiment, pass ? "PASS" : "FAIL", elapsed,
                    crit.budget_seconds);
        std::printf("             %s\n", detail.c_str());
    }
    std::printf("acceptance: %s\n", all_pass ? "ALL CRITERIA PASS"
                                             : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}

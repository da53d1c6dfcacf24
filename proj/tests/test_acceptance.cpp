// Acceptance runner: executes the nine end-to-end verification checks and
// prints one pass/fail line per criterion, enforcing the runtime budgets
// (criterion 1 < 1 s, criterion 2 < 30 s, criterion 6 < 10 s, criterion 8
// < 60 s, full suite < 120 s).

#include "potts/verify.hpp"

#include <cstdio>
#include <map>

int main() {
    const auto checks = potts::run_verification_suite();
    const std::map<int, double> budgets = {{1, 1.0}, {2, 30.0}, {6, 10.0}, {8, 60.0}};

    int passed = 0;
    double total = 0.0;
    for (const auto& c : checks) {
        total += c.seconds;
        bool ok = c.pass;
        std::string note = c.detail;
        const auto budget = budgets.find(c.id);
        if (ok && budget != budgets.end() && c.seconds >= budget->second) {
            ok = false;
            note = "runtime budget exceeded";
        }
        std::printf("criterion %d: %s (%.2fs) %s%s%s\n", c.id, ok ? "PASS" : "FAIL", c.seconds,
                    c.name.c_str(), note.empty() ? "" : " -- ", note.c_str());
        if (ok) ++passed;
    }
    const bool in_budget = total < 120.0;
    std::printf("total runtime: %.2fs (%s)\n", total, in_budget ? "within budget" : "OVER BUDGET");
    std::printf("acceptance: %d/%zu criteria pass\n", passed, checks.size());
    return (passed == static_cast<int>(checks.size()) && in_budget) ? 0 : 1;
}

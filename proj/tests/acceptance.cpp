// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "injcolor/audit.hpp"

int main() {
    const injcolor::AuditReport report = injcolor::run_audit();
    std::cout << report.render();
    return report.all_pass() ? EXIT_SUCCESS : EXIT_FAILURE;
}

// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. The same checks back the CLI `verify` subcommand.

#include <iostream>

#include "absorb/verify.hpp"

int main() {
    absorb::VerifyReport report = absorb::run_verification_suite(&std::cout);
    int passed = 0;
    for (const auto& c : report.checks)
        if (c.pass) ++passed;
    std::cout << passed << "/" << report.checks.size() << " acceptance criteria passed\n";
    return report.all_pass() ? 0 : 1;
}

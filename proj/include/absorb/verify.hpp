#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "absorb/matrix_game.hpp"
#include "absorb/rational.hpp"

namespace absorb {

struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// The full reproduction suite: every documented constant and identity
// the solver is supposed to reproduce, one check per criterion. When a
// stream is given, one line per check is printed as soon as it
// finishes.
VerifyReport run_verification_suite(std::ostream* progress = nullptr);

void print_report(const VerifyReport& report, std::ostream& os);

namespace oracle {

// Matrix game value by exhaustive support enumeration: solve the
// equalizing linear system for every square support pair and keep the
// first solution whose strategies verify against the full game.
// Independent of the simplex path on purpose.
std::optional<Rational> matrix_game_value_by_enumeration(const RationalMatrix& a);

}  // namespace oracle

}  // namespace absorb

#pragma once

#include <vector>

#include "absorb/rational.hpp"

namespace absorb::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational objective;
    std::vector<Rational> x;
};

// Maximize objective . x subject to lhs x <= rhs, x >= 0, in exact
// rational arithmetic. Two-phase dense simplex with Bland's rule, so
// termination is guaranteed; intended for the tiny programs that arise
// from matrix games and stationary-guarantee feasibility.
Result maximize(const std::vector<Rational>& objective, const std::vector<std::vector<Rational>>& lhs,
                const std::vector<Rational>& rhs);

}  // namespace absorb::lp

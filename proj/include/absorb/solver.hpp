#pragma once

#include <utility>
#include <vector>

#include "absorb/bipoly.hpp"
#include "absorb/game.hpp"
#include "absorb/matrix_game.hpp"
#include "absorb/roots.hpp"

namespace absorb {

// The auxiliary matrix whose one-shot value is zero exactly at the
// discounted value: entry (i,j) is
//   lambda*g + (1-lambda)*q*w - z*(lambda + (1-lambda)*q).
// Every entry is degree <= 1 in z with z-coefficient <= -lambda, so the
// one-shot value is strictly decreasing in z on (0,1).
struct WMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<BiPoly>> entries;
};

WMatrix build_w_symbolic(const AbsorbingGame& game);

RationalMatrix build_w_numeric(const AbsorbingGame& game, const Rational& lambda, const Rational& z);

// Encloses the lambda-discounted value within `width` by monotone
// bisection on the sign of val(W_lambda(z)).
Interval discounted_value(const AbsorbingGame& game, const Rational& lambda, const Rational& width);

// Optimal strategies of W_lambda(z) at the bisection midpoint:
// eps-optimal stationary strategies with eps shrinking with width.
std::pair<StationaryStrategy, StationaryStrategy> discounted_optimal(const AbsorbingGame& game,
                                                                     const Rational& lambda,
                                                                     const Rational& width);

// Exact discounted payoff of a stationary pair.
Rational gamma_value(const AbsorbingGame& game, const StationaryStrategy& x,
                     const StationaryStrategy& y, const Rational& lambda);

// Limit of the discounted payoff of (x, column j) as the discount
// vanishes: the absorbing average when x absorbs against j, the stage
// payoff otherwise.
Rational limit_payoff(const AbsorbingGame& game, const StationaryStrategy& x, int column);

struct GuaranteeResult {
    Interval value;
    StationaryStrategy strategy;
    std::vector<int> support;
};

// Best limit payoff a player can guarantee with a stationary strategy:
// support enumeration plus bisection on a per-support feasibility LP.
GuaranteeResult stationary_guarantee(const AbsorbingGame& game, Player player, const Rational& width);

struct LimitCandidate {
    UniPoly poly;  // squarefree primitive
    // Kernel sub-matrices (row set, column set) that produced it.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> kernels;
};

// Candidate polynomials for the limit value: determinants of every
// square sub-matrix of the symbolic W, lambda-normalized, deduplicated
// by squarefree primitive part.
std::vector<LimitCandidate> limit_candidates(const AbsorbingGame& game);

struct LimitResult {
    bool certified = false;
    AlgebraicNumber value;  // meaningful when certified
    std::vector<LimitCandidate> candidates;
    std::vector<std::pair<Rational, Interval>> lambda_trace;

    bool is_rational() const { return certified && value.is_rational(); }
    Rational rational_value() const { return value.rational_value(); }
};

std::vector<Rational> default_lambda_schedule();  // 1/10 .. 1/10^7

// Certifies the limit value by matching the v_lambda sweep against the
// root pool of the candidate polynomials: the nearest root is accepted
// when the distances shrink along the schedule, the final one is within
// tol, and no other root ties it exactly.
LimitResult limit_value(const AbsorbingGame& game, const Rational& tol = make_rational(1, 1000),
                        const std::vector<Rational>& schedule = default_lambda_schedule());

struct Theorem1Result {
    bool applicable = false;
    Rational value;
};

// For deterministic-transition games with min(m,n) < 3 the limit value
// is rational; certifies and returns it, or reports not-applicable.
Theorem1Result check_theorem1(const AbsorbingGame& game);

}  // namespace absorb

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absorb/rational.hpp"

namespace absorb {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class Player { one, two };

// Zero-sum absorbing game with a single non-absorbing state.
// g: stage payoffs while alive, q: absorption probabilities,
// w: absorbing payoffs (meaningful only where q > 0).
struct AbsorbingGame {
    int m = 0, n = 0;
    RationalMatrix g, q, w;

    bool deterministic_transitions() const;  // q entries all 0 or 1

    // Smallest/largest payoff over every g entry and every w entry with
    // q > 0; placeholder w values under q = 0 never participate.
    Rational payoff_min() const;
    Rational payoff_max() const;
};

struct StationaryStrategy {
    Player owner = Player::one;
    std::vector<Rational> probs;
};

// Empty means valid; each entry describes one violated invariant.
std::vector<std::string> validate(const AbsorbingGame& game);

struct StarCell {
    Rational value;
    bool starred = false;
};

// Star shorthand for deterministic-transition games: a starred cell
// absorbs with its value frozen (g = w = value, q = 1), an unstarred
// cell is a plain stage payoff (q = 0, w stored as placeholder 0).
AbsorbingGame from_star_matrix(const std::vector<std::vector<StarCell>>& cells);

// True when the game round-trips through star notation.
bool star_representable(const AbsorbingGame& game);

enum class BuiltinGame { big_match, theorem2, sqrt_k };

std::optional<BuiltinGame> builtin_by_name(const std::string& name);

AbsorbingGame builtin_game(BuiltinGame which, std::optional<long> k = std::nullopt);

// Payoff transform g -> a*g + b, w -> a*w + b with a > 0; rescales the
// discounted value to a*v + b for every discount factor.
AbsorbingGame affine_transform(const AbsorbingGame& game, const Rational& a, const Rational& b);

// Transpose and negate payoffs; the value flips sign.
AbsorbingGame dual_game(const AbsorbingGame& game);

// The real number p + qcoef*sqrt(k).
struct QuadraticTarget {
    Rational p;
    Rational qcoef;
    long k = 1;
};

// A 2x2 (or 1x1 when qcoef = 0) absorbing game whose limit value is
// p + qcoef*sqrt(k).
AbsorbingGame represent_quadratic(const QuadraticTarget& target);

}  // namespace absorb

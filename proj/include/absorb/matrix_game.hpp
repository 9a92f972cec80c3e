#pragma once

#include <optional>
#include <vector>

#include "absorb/game.hpp"
#include "absorb/rational.hpp"

namespace absorb {

enum class Sign { negative, zero, positive };

inline Sign sign_of_rational(const Rational& v) {
    int s = sgn(v);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

// Value and a pair of optimal mixed strategies of a one-shot zero-sum
// matrix game, with a square kernel whose rows/columns contain the
// supports of the returned strategies.
struct MatrixGameSolution {
    Rational value;
    StationaryStrategy x_opt;  // row player, maximizer
    StationaryStrategy y_opt;  // column player, minimizer
    std::vector<int> kernel_rows, kernel_cols;
};

// Exact minimax value only (single LP).
Rational matrix_game_value(const RationalMatrix& a);

MatrixGameSolution solve_matrix_game(const RationalMatrix& a);

// Sign of the exact value; pure-strategy bounds short-circuit the LP
// when they already decide it.
Sign value_sign(const RationalMatrix& a);

// One square sub-matrix per (row set, column set) pair, with its
// det/cofactor-sum candidate value where defined, flagged when the
// induced strategies extend to optimal strategies of the full game.
struct KernelInfo {
    std::vector<int> rows, cols;
    std::optional<Rational> candidate_value;
    bool verified = false;
};

std::vector<KernelInfo> enumerate_kernels(const RationalMatrix& a);

// Fraction-free (Bareiss) determinant for numeric matrices.
Rational det_rational(const RationalMatrix& a);

}  // namespace absorb

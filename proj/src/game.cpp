#include "absorb/game.hpp"

#include <stdexcept>

namespace absorb {

bool AbsorbingGame::deterministic_transitions() const {
    for (const auto& row : q)
        for (const auto& v : row)
            if (v != 0 && v != 1) return false;
    return true;
}

Rational AbsorbingGame::payoff_min() const {
    Rational lo = g.at(0).at(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            lo = std::min(lo, g[i][j]);
            if (q[i][j] > 0) lo = std::min(lo, w[i][j]);
        }
    return lo;
}

Rational AbsorbingGame::payoff_max() const {
    Rational hi = g.at(0).at(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            hi = std::max(hi, g[i][j]);
            if (q[i][j] > 0) hi = std::max(hi, w[i][j]);
        }
    return hi;
}

namespace {

std::string cell(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool shape_ok(const RationalMatrix& mat, int m, int n) {
    if (static_cast<int>(mat.size()) != m) return false;
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != n) return false;
    return true;
}

}  // namespace

std::vector<std::string> validate(const AbsorbingGame& game) {
    std::vector<std::string> violations;
    if (game.m < 1 || game.n < 1) {
        violations.push_back("dimensions must be at least 1x1");
        return violations;
    }
    if (!shape_ok(game.g, game.m, game.n)) violations.push_back("g matrix dimension mismatch");
    if (!shape_ok(game.q, game.m, game.n)) violations.push_back("q matrix dimension mismatch");
    if (!shape_ok(game.w, game.m, game.n)) violations.push_back("w matrix dimension mismatch");
    if (!violations.empty()) return violations;
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j)
            if (game.q[i][j] < 0 || game.q[i][j] > 1)
                violations.push_back("q out of range at " + cell(i, j));
    return violations;
}

AbsorbingGame from_star_matrix(const std::vector<std::vector<StarCell>>& cells) {
    if (cells.empty() || cells[0].empty())
        throw std::invalid_argument("from_star_matrix: empty grid");
    int m = static_cast<int>(cells.size());
    int n = static_cast<int>(cells[0].size());
    for (const auto& row : cells)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("from_star_matrix: ragged grid");

    AbsorbingGame game;
    game.m = m;
    game.n = n;
    game.g.assign(m, std::vector<Rational>(n, Rational(0)));
    game.q = game.g;
    game.w = game.g;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const StarCell& c = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
            game.g[i][j] = c.value;
            if (c.starred) {
                game.q[i][j] = 1;
                game.w[i][j] = c.value;
            }
        }
    return game;
}

bool star_representable(const AbsorbingGame& game) {
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            if (game.q[i][j] == 0) {
                if (game.w[i][j] != 0) return false;
            } else if (game.q[i][j] == 1) {
                if (game.w[i][j] != game.g[i][j]) return false;
            } else {
                return false;
            }
        }
    return true;
}

std::optional<BuiltinGame> builtin_by_name(const std::string& name) {
    if (name == "big-match") return BuiltinGame::big_match;
    if (name == "theorem2") return BuiltinGame::theorem2;
    if (name == "sqrt-k") return BuiltinGame::sqrt_k;
    return std::nullopt;
}

AbsorbingGame builtin_game(BuiltinGame which, std::optional<long> k) {
    auto star = [](long v) { return StarCell{Rational(v), true}; };
    auto plain = [](long v) { return StarCell{Rational(v), false}; };
    switch (which) {
        case BuiltinGame::big_match:
            return from_star_matrix({{star(1), star(0)}, {plain(0), plain(1)}});
        case BuiltinGame::theorem2:
            return from_star_matrix({{star(1), star(1), star(2)},
                                     {star(1), star(2), plain(0)},
                                     {star(2), plain(0), star(1)}});
        case BuiltinGame::sqrt_k: {
            if (!k || *k < 1) throw std::invalid_argument("sqrt-k game needs k >= 1");
            AbsorbingGame game;
            game.m = game.n = 2;
            Rational kk(*k);
            game.g = {{Rational(0), Rational(1)}, {Rational(1), kk}};
            game.q = {{make_rational(1, *k), Rational(1)}, {Rational(1), Rational(1)}};
            game.w = {{kk, Rational(1)}, {Rational(1), kk}};
            return game;
        }
    }
    throw std::logic_error("builtin_game: unknown id");
}

AbsorbingGame affine_transform(const AbsorbingGame& game, const Rational& a, const Rational& b) {
    if (a <= 0) throw std::domain_error("affine_transform: scale must be positive (use dual to negate)");
    AbsorbingGame out = game;
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            out.g[i][j] = a * game.g[i][j] + b;
            // Placeholder w under q = 0 stays a placeholder.
            out.w[i][j] = game.q[i][j] > 0 ? a * game.w[i][j] + b : game.w[i][j];
        }
    return out;
}

AbsorbingGame dual_game(const AbsorbingGame& game) {
    AbsorbingGame out;
    out.m = game.n;
    out.n = game.m;
    out.g.assign(out.m, std::vector<Rational>(out.n, Rational(0)));
    out.q = out.g;
    out.w = out.g;
    for (int i = 0; i < game.m; ++i)
        for (int j = 0; j < game.n; ++j) {
            out.g[j][i] = -game.g[i][j];
            out.q[j][i] = game.q[i][j];
            out.w[j][i] = game.q[i][j] > 0 ? -game.w[i][j] : game.w[i][j];
        }
    return out;
}

AbsorbingGame represent_quadratic(const QuadraticTarget& target) {
    if (target.k < 1) throw std::invalid_argument("represent_quadratic: k must be >= 1");
    if (target.qcoef == 0) {
        AbsorbingGame game;
        game.m = game.n = 1;
        game.g = {{target.p}};
        game.q = {{Rational(1)}};
        game.w = {{target.p}};
        return game;
    }
    AbsorbingGame base = builtin_game(BuiltinGame::sqrt_k, target.k);
    if (target.qcoef > 0) return affine_transform(base, target.qcoef, target.p);
    return affine_transform(dual_game(base), -target.qcoef, target.p);
}

}  // namespace absorb

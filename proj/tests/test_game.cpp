#include "absorb/game.hpp"

#include <random>

#include "absorb/solver.hpp"
#include "doctest.h"

using namespace absorb;

namespace {

bool same_game(const AbsorbingGame& a, const AbsorbingGame& b) {
    return a.m == b.m && a.n == b.n && a.g == b.g && a.q == b.q && a.w == b.w;
}

AbsorbingGame random_star(std::mt19937_64& rng, int m, int n) {
    std::vector<std::vector<StarCell>> cells(static_cast<size_t>(m), std::vector<StarCell>(static_cast<size_t>(n)));
    for (auto& row : cells)
        for (auto& c : row) {
            c.value = Rational(static_cast<long>(rng() % 11) - 5);
            c.starred = rng() % 2 == 0;
        }
    return from_star_matrix(cells);
}

}  // namespace

TEST_SUITE("game_model") {
    TEST_CASE("validation") {
        CHECK(validate(builtin_game(BuiltinGame::big_match)).empty());

        AbsorbingGame bad = builtin_game(BuiltinGame::big_match);
        bad.q[0][0] = make_rational(3, 2);
        auto violations = validate(bad);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0] == "q out of range at (1,1)");

        AbsorbingGame ragged = builtin_game(BuiltinGame::big_match);
        ragged.q[0].push_back(Rational(0));
        auto dims = validate(ragged);
        REQUIRE(!dims.empty());
        CHECK(dims[0].find("dimension") != std::string::npos);
    }

    TEST_CASE("star matrix construction") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        CHECK(bm.m == 2);
        CHECK(bm.n == 2);
        CHECK(bm.g == RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        CHECK(bm.q == RationalMatrix{{Rational(1), Rational(1)}, {Rational(0), Rational(0)}});
        CHECK(bm.w == RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
        CHECK(bm.deterministic_transitions());
        CHECK(star_representable(bm));

        AbsorbingGame t2 = builtin_game(BuiltinGame::theorem2);
        CHECK(t2.m == 3);
        CHECK(t2.g == RationalMatrix{{Rational(1), Rational(1), Rational(2)},
                                     {Rational(1), Rational(2), Rational(0)},
                                     {Rational(2), Rational(0), Rational(1)}});
        CHECK(t2.q == RationalMatrix{{Rational(1), Rational(1), Rational(1)},
                                     {Rational(1), Rational(1), Rational(0)},
                                     {Rational(1), Rational(0), Rational(1)}});

        AbsorbingGame plain = from_star_matrix({{StarCell{Rational(5), false}}});
        CHECK(plain.q[0][0] == 0);
        CHECK(plain.g[0][0] == 5);

        CHECK_THROWS_AS(from_star_matrix({}), std::invalid_argument);
    }

    TEST_CASE("sqrt-k builtin") {
        AbsorbingGame g4 = builtin_game(BuiltinGame::sqrt_k, 4);
        CHECK(g4.q == RationalMatrix{{make_rational(1, 4), Rational(1)}, {Rational(1), Rational(1)}});
        CHECK(g4.w == RationalMatrix{{Rational(4), Rational(1)}, {Rational(1), Rational(4)}});
        CHECK(g4.g[0][0] == 0);
        CHECK(!g4.deterministic_transitions());
        CHECK_THROWS_AS(builtin_game(BuiltinGame::sqrt_k), std::invalid_argument);
        CHECK_THROWS_AS(builtin_game(BuiltinGame::sqrt_k, 0), std::invalid_argument);

        // k = 1: both players can force 1
        Interval v = discounted_value(builtin_game(BuiltinGame::sqrt_k, 1), make_rational(1, 3), pow10(-9));
        CHECK(v.contains(Rational(1)));
    }

    TEST_CASE("builtin lookup by name") {
        CHECK(builtin_by_name("big-match") == BuiltinGame::big_match);
        CHECK(builtin_by_name("theorem2") == BuiltinGame::theorem2);
        CHECK(builtin_by_name("sqrt-k") == BuiltinGame::sqrt_k);
        CHECK(!builtin_by_name("nope"));
    }

    TEST_CASE("affine transform") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        CHECK(same_game(affine_transform(bm, Rational(1), Rational(0)), bm));

        AbsorbingGame doubled = affine_transform(builtin_game(BuiltinGame::theorem2), Rational(2), Rational(0));
        CHECK(doubled.g[0][2] == 4);
        CHECK(doubled.w[2][0] == 4);
        CHECK(doubled.q == builtin_game(BuiltinGame::theorem2).q);

        CHECK_THROWS_AS(affine_transform(bm, Rational(0), Rational(0)), std::domain_error);
        CHECK_THROWS_AS(affine_transform(bm, Rational(-1), Rational(0)), std::domain_error);

        // v_lambda(aG + b) = a v_lambda(G) + b, checked at lambda = 1/10
        AbsorbingGame s2 = builtin_game(BuiltinGame::sqrt_k, 2);
        Rational lambda = make_rational(1, 10), width = pow10(-9);
        Interval v = discounted_value(s2, lambda, width);
        Interval vshift = discounted_value(affine_transform(s2, Rational(1), Rational(1)), lambda, width);
        CHECK(abs(vshift.midpoint() - (v.midpoint() + 1)) <= 2 * width);
    }

    TEST_CASE("dual game") {
        AbsorbingGame t2 = builtin_game(BuiltinGame::theorem2);
        CHECK(same_game(dual_game(dual_game(t2)), t2));

        Interval v = discounted_value(dual_game(builtin_game(BuiltinGame::big_match)),
                                      make_rational(1, 10), pow10(-9));
        CHECK(v.contains(make_rational(-1, 2)));
    }

    TEST_CASE("quadratic representation") {
        AbsorbingGame base = represent_quadratic({Rational(0), Rational(1), 2});
        CHECK(same_game(base, builtin_game(BuiltinGame::sqrt_k, 2)));

        AbsorbingGame point = represent_quadratic({make_rational(5, 3), Rational(0), 7});
        CHECK(point.m == 1);
        CHECK(point.w[0][0] == make_rational(5, 3));
        LimitResult lim = limit_value(point);
        CHECK(lim.certified);
        CHECK(lim.is_rational());
        CHECK(lim.rational_value() == make_rational(5, 3));

        LimitResult sqrt2_plus_1 = limit_value(represent_quadratic({Rational(1), Rational(1), 2}));
        CHECK(sqrt2_plus_1.certified);
        CHECK(std::abs(sqrt2_plus_1.value.approx() - 2.414214) < 1e-5);
        // (z - 1)^2 - 2 annihilates 1 + sqrt(2)
        CHECK(sqrt2_plus_1.value.poly == UniPoly({-1, -2, 1}));

        LimitResult minus_sqrt3 = limit_value(represent_quadratic({Rational(0), Rational(-1), 3}));
        CHECK(minus_sqrt3.certified);
        CHECK(std::abs(minus_sqrt3.value.approx() + 1.732051) < 1e-5);
        CHECK(minus_sqrt3.value.poly == UniPoly({-3, 0, 1}));

        CHECK_THROWS_AS(represent_quadratic({Rational(0), Rational(1), 0}), std::invalid_argument);
    }

    TEST_CASE("placeholder w under q = 0 never leaks into results") {
        std::mt19937_64 rng(777001);
        for (int t = 0; t < 8; ++t) {
            AbsorbingGame game = random_star(rng, 2, 2 + static_cast<int>(t % 2));
            AbsorbingGame junked = game;
            bool any_placeholder = false;
            for (int i = 0; i < game.m; ++i)
                for (int j = 0; j < game.n; ++j)
                    if (game.q[i][j] == 0) {
                        junked.w[i][j] = Rational(static_cast<long>(rng() % 2001) - 1000);
                        any_placeholder = true;
                    }
            if (!any_placeholder) continue;

            Rational lambda = make_rational(1, 9), width = pow10(-8);
            Interval a = discounted_value(game, lambda, width);
            Interval b = discounted_value(junked, lambda, width);
            CHECK(a.lo == b.lo);
            CHECK(a.hi == b.hi);

            LimitResult la = limit_value(game);
            LimitResult lb = limit_value(junked);
            CHECK(la.certified == lb.certified);
            if (la.certified && lb.certified) {
                CHECK(la.value.poly == lb.value.poly);
            }

            GuaranteeResult ga = stationary_guarantee(game, Player::one, pow10(-6));
            GuaranteeResult gb = stationary_guarantee(junked, Player::one, pow10(-6));
            CHECK(ga.value.lo == gb.value.lo);
            CHECK(ga.strategy.probs == gb.strategy.probs);
        }
    }
}

#include "absorb/simulate.hpp"

#include <cmath>

#include "absorb/solver.hpp"
#include "doctest.h"

using namespace absorb;

namespace {

StationaryStrategy rows(std::vector<Rational> p) { return {Player::one, std::move(p)}; }
StationaryStrategy cols(std::vector<Rational> p) { return {Player::two, std::move(p)}; }

}  // namespace

TEST_SUITE("simulate") {
    TEST_CASE("pure absorbing entry pays lambda g + (1 - lambda) w") {
        AbsorbingGame game;
        game.m = game.n = 1;
        game.g = {{Rational(3)}};
        game.q = {{Rational(1)}};
        game.w = {{Rational(5)}};
        PlayoutConfig config;
        config.lambda = make_rational(1, 4);
        double expect = to_double(gamma_value(game, rows({Rational(1)}), cols({Rational(1)}),
                                              config.lambda));
        for (long i = 0; i < 5; ++i)
            CHECK(playout(game, rows({Rational(1)}), cols({Rational(1)}), config, i) ==
                  doctest::Approx(expect).epsilon(1e-12));
        GammaEstimate est = estimate_gamma(game, rows({Rational(1)}), cols({Rational(1)}),
                                           config.lambda, 500, 9);
        CHECK(est.mean == doctest::Approx(expect).epsilon(1e-12));
        CHECK(est.stderr <= 1e-13);
    }

    TEST_CASE("constant absorbing game pays its constant") {
        AbsorbingGame game;
        game.m = game.n = 1;
        game.g = {{make_rational(7, 2)}};
        game.q = {{Rational(1)}};
        game.w = {{make_rational(7, 2)}};
        PlayoutConfig config;
        config.lambda = make_rational(1, 7);
        CHECK(playout(game, rows({Rational(1)}), cols({Rational(1)}), config) ==
              doctest::Approx(3.5).epsilon(1e-12));
    }

    TEST_CASE("big match pure corners") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        PlayoutConfig config;
        config.lambda = make_rational(1, 10);

        // bottom vs right: never absorbs, every stage pays 1; only the
        // truncated tail is missing
        double sample = playout(bm, rows({Rational(0), Rational(1)}), cols({Rational(0), Rational(1)}), config);
        CHECK(std::abs(sample - 1.0) < 1e-8);

        // top vs left: absorbs immediately at payoff 1
        double absorbed = playout(bm, rows({Rational(1), Rational(0)}), cols({Rational(1), Rational(0)}), config);
        CHECK(absorbed == doctest::Approx(1.0).epsilon(1e-12));

        // bottom vs left: never absorbs, pays 0
        CHECK(playout(bm, rows({Rational(0), Rational(1)}), cols({Rational(1), Rational(0)}), config) == 0.0);
    }

    TEST_CASE("seed determinism") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        auto x = rows({make_rational(1, 11), make_rational(10, 11)});
        auto y = cols({make_rational(1, 2), make_rational(1, 2)});
        GammaEstimate a = estimate_gamma(bm, x, y, make_rational(1, 10), 2000, 42);
        GammaEstimate b = estimate_gamma(bm, x, y, make_rational(1, 10), 2000, 42);
        CHECK(a.mean == b.mean);
        CHECK(a.stderr == b.stderr);
        GammaEstimate c = estimate_gamma(bm, x, y, make_rational(1, 10), 2000, 43);
        CHECK(a.mean != c.mean);

        PlayoutConfig config;
        config.lambda = make_rational(1, 10);
        config.seed = 42;
        CHECK(playout(bm, x, y, config, 17) == playout(bm, x, y, config, 17));
        CHECK(playout(bm, x, y, config, 17) != playout(bm, x, y, config, 18));
    }

    TEST_CASE("estimates match the closed form within standard errors") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        auto x = rows({make_rational(1, 11), make_rational(10, 11)});
        auto y = cols({make_rational(1, 2), make_rational(1, 2)});
        Rational lambda = make_rational(1, 10);
        GammaEstimate est = estimate_gamma(bm, x, y, lambda, 20000, 20230701);
        double exact = to_double(gamma_value(bm, x, y, lambda));
        CHECK(exact == 0.5);  // the equalizer makes gamma exactly 1/2
        CHECK(std::abs(est.mean - exact) <= 5 * est.stderr);

        AbsorbingGame s4 = builtin_game(BuiltinGame::sqrt_k, 4);
        auto xs = rows({make_rational(1, 3), make_rational(2, 3)});
        auto ys = cols({Rational(1), Rational(0)});
        Rational lam = make_rational(1, 100);
        GammaEstimate est2 = estimate_gamma(s4, xs, ys, lam, 20000, 77);
        double exact2 = to_double(gamma_value(s4, xs, ys, lam));
        CHECK(std::abs(est2.mean - exact2) <= 5 * est2.stderr);
    }

    TEST_CASE("input validation") {
        AbsorbingGame bm = builtin_game(BuiltinGame::big_match);
        auto x = rows({make_rational(1, 2), make_rational(1, 2)});
        auto y = cols({make_rational(1, 2), make_rational(1, 2)});
        PlayoutConfig config;
        config.lambda = Rational(1);
        CHECK_THROWS_AS(playout(bm, x, y, config), std::domain_error);
        config.lambda = make_rational(1, 2);
        config.tail_epsilon = 0;
        CHECK_THROWS_AS(playout(bm, x, y, config), std::domain_error);
        CHECK_THROWS_AS(estimate_gamma(bm, x, y, make_rational(1, 2), 0, 1), std::domain_error);
        CHECK_THROWS_AS(playout(bm, y, x, PlayoutConfig{make_rational(1, 2)}), std::invalid_argument);
    }
}

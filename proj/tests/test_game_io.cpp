#include "absorb/game_io.hpp"

#include <random>

#include "doctest.h"

using namespace absorb;

namespace {

bool same_game(const AbsorbingGame& a, const AbsorbingGame& b) {
    return a.m == b.m && a.n == b.n && a.g == b.g && a.q == b.q && a.w == b.w;
}

}  // namespace

TEST_SUITE("game_io") {
    TEST_CASE("star form parses to the big match") {
        AbsorbingGame game = parse_game_file(R"({"stars": [["1*","0*"],["0","1"]]})");
        CHECK(same_game(game, builtin_game(BuiltinGame::big_match)));
    }

    TEST_CASE("entries form with fractional absorption") {
        AbsorbingGame game = parse_game_file(R"({"entries": [[{"g":0,"q":"1/2","w":2}]]})");
        CHECK(game.m == 1);
        CHECK(game.n == 1);
        CHECK(game.q[0][0] == make_rational(1, 2));
        CHECK(game.w[0][0] == 2);
    }

    TEST_CASE("parse errors carry positions") {
        CHECK_THROWS_WITH_AS(parse_game_file(R"({"stars": [["1*","x"]]})"),
                             doctest::Contains("(1,2)"), GameParseError);
        CHECK_THROWS_WITH_AS(parse_game_file(R"({"entries": [[{"g":0,"q":"3/2","w":1}]]})"),
                             doctest::Contains("q out of range at (1,1)"), GameParseError);
        CHECK_THROWS_WITH_AS(parse_game_file(R"({"entries": [[{"g":0.5,"q":1,"w":1}]]})"),
                             doctest::Contains("float"), GameParseError);
        CHECK_THROWS_WITH_AS(parse_game_file(R"({"stars": [["1*","2*"],["0"]]})"),
                             doctest::Contains("ragged"), GameParseError);
        CHECK_THROWS_AS(parse_game_file(R"({"entries": [[{"g":0,"q":1}]]})"), GameParseError);
        CHECK_THROWS_AS(parse_game_file("not json"), GameParseError);
        CHECK_THROWS_AS(parse_game_file(R"({"stars": [], "entries": []})"), GameParseError);
        CHECK_THROWS_AS(parse_game_file(R"({})"), GameParseError);
    }

    TEST_CASE("missing w is fine for non-absorbing entries") {
        AbsorbingGame game = parse_game_file(R"({"entries": [[{"g":"7/2","q":0}]]})");
        CHECK(game.g[0][0] == make_rational(7, 2));
        CHECK(game.w[0][0] == 0);
    }

    TEST_CASE("builtin games round trip") {
        for (BuiltinGame id : {BuiltinGame::big_match, BuiltinGame::theorem2}) {
            AbsorbingGame game = builtin_game(id, 3);
            CHECK(same_game(parse_game_file(serialize_game(game)), game));
            CHECK(serialize_game(game).find("stars") != std::string::npos);
        }
        AbsorbingGame sk = builtin_game(BuiltinGame::sqrt_k, 5);
        CHECK(same_game(parse_game_file(serialize_game(sk)), sk));
        CHECK(serialize_game(sk).find("entries") != std::string::npos);
    }

    TEST_CASE("random games round trip exactly") {
        std::mt19937_64 rng(606060);
        for (int t = 0; t < 40; ++t) {
            AbsorbingGame game;
            game.m = 1 + static_cast<int>(rng() % 3);
            game.n = 1 + static_cast<int>(rng() % 3);
            game.g.assign(static_cast<size_t>(game.m), std::vector<Rational>(static_cast<size_t>(game.n)));
            game.q = game.g;
            game.w = game.g;
            for (int i = 0; i < game.m; ++i)
                for (int j = 0; j < game.n; ++j) {
                    game.g[i][j] = make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
                    long den = 1 + static_cast<long>(rng() % 4);
                    game.q[i][j] = make_rational(static_cast<long>(rng() % (den + 1)), den);
                    game.w[i][j] = game.q[i][j] > 0
                                       ? make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5))
                                       : Rational(0);
                }
            CHECK(same_game(parse_game_file(serialize_game(game)), game));
        }
    }
}

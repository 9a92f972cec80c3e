#pragma once

#include <stdexcept>
#include <string>

#include "absorb/game.hpp"

namespace absorb {

struct GameParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Game file format (UTF-8 JSON), two shapes:
//   {"stars":   [["1*","0*"],["0","1"]]}            star shorthand
//   {"entries": [[{"g":0,"q":"1/2","w":2}, ...]]}   general (g,(q,w))
// Rationals are integers or "p/q" strings; floats are rejected.
AbsorbingGame parse_game_file(const std::string& text);

// Emits the star form when the game is star-representable, the entries
// form otherwise; parse(serialize(g)) == g exactly.
std::string serialize_game(const AbsorbingGame& game);

}  // namespace absorb

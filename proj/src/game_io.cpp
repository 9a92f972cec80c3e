#include "absorb/game_io.hpp"

#include "json.hpp"

namespace absorb {

namespace {

using json = nlohmann::ordered_json;

std::string at(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Rational parse_number(const json& v, int i, int j, const char* what) {
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_number_float())
        throw GameParseError(std::string("float ") + what + " at " + at(i, j) +
                             ": game data must be exact rationals");
    if (v.is_string()) {
        auto r = parse_rational_strict(v.get<std::string>());
        if (!r) throw GameParseError(std::string("malformed rational ") + what + " at " + at(i, j));
        return *r;
    }
    throw GameParseError(std::string("expected integer or \"p/q\" for ") + what + " at " + at(i, j));
}

AbsorbingGame parse_stars(const json& grid) {
    if (!grid.is_array() || grid.empty()) throw GameParseError("\"stars\" must be a nonempty grid");
    std::vector<std::vector<StarCell>> cells;
    size_t cols = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const json& row = grid[i];
        if (!row.is_array() || row.empty()) throw GameParseError("\"stars\" row " + std::to_string(i + 1) + " must be a nonempty array");
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw GameParseError("ragged grid: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(row.size()) + " cells, expected " + std::to_string(cols));
        std::vector<StarCell> out_row;
        for (size_t j = 0; j < row.size(); ++j) {
            const json& cell = row[j];
            if (!cell.is_string())
                throw GameParseError("star cell at " + at(static_cast<int>(i), static_cast<int>(j)) +
                                     " must be a string like \"3/2*\" or \"0\"");
            std::string text = cell.get<std::string>();
            bool starred = !text.empty() && text.back() == '*';
            if (starred) text.pop_back();
            auto value = parse_rational_strict(text);
            if (!value)
                throw GameParseError("parse error at " + at(static_cast<int>(i), static_cast<int>(j)) +
                                     ": bad rational \"" + cell.get<std::string>() + "\"");
            out_row.push_back({*value, starred});
        }
        cells.push_back(std::move(out_row));
    }
    return from_star_matrix(cells);
}

AbsorbingGame parse_entries(const json& grid) {
    if (!grid.is_array() || grid.empty()) throw GameParseError("\"entries\" must be a nonempty grid");
    AbsorbingGame game;
    game.m = static_cast<int>(grid.size());
    size_t cols = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const json& row = grid[i];
        if (!row.is_array() || row.empty())
            throw GameParseError("\"entries\" row " + std::to_string(i + 1) + " must be a nonempty array");
        if (i == 0) {
            cols = row.size();
            game.n = static_cast<int>(cols);
            game.g.assign(grid.size(), std::vector<Rational>(cols, Rational(0)));
            game.q = game.g;
            game.w = game.g;
        } else if (row.size() != cols) {
            throw GameParseError("ragged grid: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(row.size()) + " cells, expected " + std::to_string(cols));
        }
        for (size_t j = 0; j < row.size(); ++j) {
            const json& cell = row[j];
            int ii = static_cast<int>(i), jj = static_cast<int>(j);
            if (!cell.is_object() || !cell.contains("g") || !cell.contains("q"))
                throw GameParseError("entry at " + at(ii, jj) + " must be an object with g and q");
            game.g[i][j] = parse_number(cell["g"], ii, jj, "g");
            game.q[i][j] = parse_number(cell["q"], ii, jj, "q");
            if (game.q[i][j] < 0 || game.q[i][j] > 1)
                throw GameParseError("q out of range at " + at(ii, jj));
            if (cell.contains("w"))
                game.w[i][j] = parse_number(cell["w"], ii, jj, "w");
            else if (game.q[i][j] > 0)
                throw GameParseError("entry at " + at(ii, jj) + " absorbs (q > 0) but has no w");
        }
    }
    return game;
}

}  // namespace

AbsorbingGame parse_game_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GameParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw GameParseError("expected a JSON object with \"stars\" or \"entries\"");
    bool has_stars = doc.contains("stars"), has_entries = doc.contains("entries");
    if (has_stars == has_entries)
        throw GameParseError("expected exactly one of \"stars\" or \"entries\"");
    AbsorbingGame game = has_stars ? parse_stars(doc["stars"]) : parse_entries(doc["entries"]);
    auto violations = validate(game);
    if (!violations.empty()) throw GameParseError(violations.front());
    return game;
}

std::string serialize_game(const AbsorbingGame& game) {
    json doc;
    if (star_representable(game)) {
        json grid = json::array();
        for (int i = 0; i < game.m; ++i) {
            json row = json::array();
            for (int j = 0; j < game.n; ++j)
                row.push_back(to_fraction_string(game.g[i][j]) + (game.q[i][j] == 1 ? "*" : ""));
            grid.push_back(row);
        }
        doc["stars"] = grid;
    } else {
        json grid = json::array();
        for (int i = 0; i < game.m; ++i) {
            json row = json::array();
            for (int j = 0; j < game.n; ++j) {
                json cell;
                cell["g"] = to_fraction_string(game.g[i][j]);
                cell["q"] = to_fraction_string(game.q[i][j]);
                cell["w"] = to_fraction_string(game.w[i][j]);
                row.push_back(cell);
            }
            grid.push_back(row);
        }
        doc["entries"] = grid;
    }
    return doc.dump(2);
}

}  // namespace absorb

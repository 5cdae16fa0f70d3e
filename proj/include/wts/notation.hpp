#pragma once

#include <string>
#include <string_view>

#include "wts/disjunctive.hpp"
#include "wts/game_store.hpp"
#include "wts/partizan.hpp"

#include "wts/detail/json.hpp"

namespace wts {

// game := INT | '{' alternation '}'. Inside braces the unique bar token of
// highest multiplicity at depth 0 separates the sides; a side holding lower
// bars is a single unbraced game, otherwise a comma list. Whitespace is
// ignored. Throws SyntaxError; construction errors come from the store.
GameRef parse_game(GameStore& store, std::string_view text);

// Also accepts '*', 'n*' and dyadic leaves such as 3/8 or -1/2*. Sides may
// be empty.
PartizanRef parse_partizan(PartizanStore& store, std::string_view text);

enum class Style { Nested, Bars };

// Bars style writes single compound options inline with bars of increasing
// multiplicity, up to kMaxBars; deeper options are braced.
inline constexpr int kMaxBars = 4;
std::string format_game(const GameStore& store, GameRef g, Style style = Style::Bars);

// Numbers and number-plus-star are written by value, other forms by options.
std::string format_partizan(PartizanStore& store, PartizanRef g);

nlohmann::json game_to_json(const GameStore& store, GameRef g);
GameRef game_from_json(GameStore& store, const nlohmann::json& j);

nlohmann::json combiner_to_json(const Combiner& f);
Combiner combiner_from_json(const nlohmann::json& j);

}  // namespace wts

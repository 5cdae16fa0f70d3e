#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "wts/game_store.hpp"

namespace wts {

// -n for a leaf, -{L|R} = {-R|-L} otherwise.
GameRef negate(GameStore& store, GameRef g);

// heat(leaf) = leaf, heat({L|R}, t) = {t + heat(L) | -t + heat(R)}.
GameRef heat(GameStore& store, GameRef g, std::int64_t t);

// Adds n to every leaf.
GameRef translate(GameStore& store, GameRef g, std::int64_t n);

GameRef star(GameStore& store);
// {{0|0}|{n|n}}
GameRef q_gadget(GameStore& store, std::int64_t n);

// Returns g if even, g + * if odd.
GameRef even_projection(GameStore& store, GameRef g);

// Every distinct subgame, g first, in depth-first discovery order.
std::vector<GameRef> subgames(const GameStore& store, GameRef g);
std::set<std::int64_t> value_set(const GameStore& store, GameRef g);
bool is_s_valued(const GameStore& store, GameRef g, const std::set<std::int64_t>& values);

}  // namespace wts

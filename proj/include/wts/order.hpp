#pragma once

#include "wts/game_store.hpp"

namespace wts {

enum class Comparison { Less, Equal, Greater, Incomparable };

const char* comparison_name(Comparison c);

// Class I: even gap is 0. Class J: class I with odd gap <= 2.
bool in_invertible_class(const GameStore& store, GameRef g);
bool in_j(const GameStore& store, GameRef g);
// Every subgame has sides equivalent to games in class J.
bool in_k(GameStore& store, GameRef g);

// Left and right sides, both in class I.
GameRef upside(GameStore& store, GameRef g);
GameRef downside(GameStore& store, GameRef g);

// Outcome of g + h without building the sum.
Outcome sum_outcome(GameStore& store, GameRef g, GameRef h);

// Order on class I. Throws NotInI otherwise.
Comparison compare_invertible(GameStore& store, GameRef x, GameRef y);

bool ge(GameStore& store, GameRef g, GameRef h);
bool le(GameStore& store, GameRef g, GameRef h);
bool equivalent(GameStore& store, GameRef g, GameRef h);
Comparison compare(GameStore& store, GameRef g, GameRef h);
// One-sided orders: compare upsides only, or downsides only.
bool ge_plus(GameStore& store, GameRef g, GameRef h);
bool ge_minus(GameStore& store, GameRef g, GameRef h);
bool equivalent_plus(GameStore& store, GameRef g, GameRef h);
bool equivalent_minus(GameStore& store, GameRef g, GameRef h);

bool invertible(GameStore& store, GameRef g);

}  // namespace wts

#pragma once

#include <cstdint>

#include "wts/game_store.hpp"
#include "wts/workspace.hpp"

namespace wts {

// Unique canonical game in class I equivalent to g, found by removing
// dominated options and bypassing reversible ones. Throws NotInvertible.
GameRef canonical_form(GameStore& store, GameRef g);

// Same result computed through the normal-play canonical form: heat into
// class J, map across, simplify there, map back and cool.
GameRef canonical_form_via_psi(Workspace& ws, GameRef g);

// g is in class I and no subgame has a dominated or reversible option.
bool is_canonical(GameStore& store, GameRef g);

// Smallest t >= 0 with heat(g, t) in class J, for g in class I.
std::int64_t heating_to_j(const GameStore& store, GameRef g);

}  // namespace wts

#pragma once

#include "wts/detail/memo.hpp"
#include "wts/game_store.hpp"
#include "wts/partizan.hpp"

namespace wts {

// A scoring-game store, a normal-play store, and the caches for maps
// between them.
struct Workspace {
    GameStore games;
    PartizanStore partizan;
    detail::MemoTable cross;
};

}  // namespace wts

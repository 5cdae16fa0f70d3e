#pragma once

#include "wts/game_store.hpp"
#include "wts/partizan.hpp"
#include "wts/workspace.hpp"

namespace wts {

// Leaf n goes to the integer n, {L|R} to the plain form {psi(L)|psi(R)}.
PartizanRef psi(Workspace& ws, GameRef g);
// Same recursion, but each node is the upper or lower integer bracket.
PartizanRef psi_plus(Workspace& ws, GameRef g);
PartizanRef psi_minus(Workspace& ws, GameRef g);

// Inverse maps on class J. An integer n goes to leaf n (phi0) or to
// {n-1|n+1} (phi1); other forms recurse on options with the index flipped.
GameRef phi0(Workspace& ws, PartizanRef p);
GameRef phi1(Workspace& ws, PartizanRef p);
GameRef phi(Workspace& ws, PartizanRef p, Parity parity);

}  // namespace wts

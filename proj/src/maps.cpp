#include "wts/maps.hpp"

#include "wts/checked.hpp"
#include "wts/detail/ops.hpp"

namespace wts {

namespace {

enum class Bracket { None, Plus, Minus };

PartizanRef psi_impl(Workspace& ws, GameRef g, Bracket mode) {
    const GameNode& n = ws.games.node(g);
    if (n.leaf) return p_int(ws.partizan, n.score);
    detail::Op op = mode == Bracket::None ? detail::kPsi
                    : mode == Bracket::Plus ? detail::kPsiPlus
                                            : detail::kPsiMinus;
    detail::MemoKey key{op, g.id, 0, 0};
    if (auto hit = ws.cross.find(key)) return PartizanRef{static_cast<std::uint32_t>(hit->first)};
    std::vector<PartizanRef> left, right;
    for (GameRef o : n.left) left.push_back(psi_impl(ws, o, mode));
    for (GameRef o : n.right) right.push_back(psi_impl(ws, o, mode));
    PartizanRef out;
    switch (mode) {
        case Bracket::None: out = ws.partizan.make(std::move(left), std::move(right)); break;
        case Bracket::Plus: out = bracket_plus(ws.partizan, left, right); break;
        case Bracket::Minus: out = bracket_minus(ws.partizan, left, right); break;
    }
    ws.cross.put(key, {out.id, 0});
    return out;
}

}  // namespace

PartizanRef psi(Workspace& ws, GameRef g) { return psi_impl(ws, g, Bracket::None); }
PartizanRef psi_plus(Workspace& ws, GameRef g) { return psi_impl(ws, g, Bracket::Plus); }
PartizanRef psi_minus(Workspace& ws, GameRef g) { return psi_impl(ws, g, Bracket::Minus); }

GameRef phi(Workspace& ws, PartizanRef p, Parity parity) {
    detail::MemoKey key{parity == Parity::Even ? detail::kPhi0 : detail::kPhi1, p.id, 0, 0};
    if (auto hit = ws.cross.find(key)) return GameRef{static_cast<std::uint32_t>(hit->first)};
    GameRef out;
    if (auto n = p_as_integer(ws.partizan, p)) {
        if (parity == Parity::Even) {
            out = ws.games.leaf(*n);
        } else {
            out = ws.games.make_game({ws.games.leaf(checked_sub(*n, 1))},
                                     {ws.games.leaf(checked_add(*n, 1))});
        }
    } else {
        // A form that is not an integer has options on both sides.
        std::vector<GameRef> left, right;
        for (PartizanRef o : ws.partizan.left_options(p)) left.push_back(phi(ws, o, flip(parity)));
        for (PartizanRef o : ws.partizan.right_options(p)) right.push_back(phi(ws, o, flip(parity)));
        out = ws.games.make_game(std::move(left), std::move(right));
    }
    ws.cross.put(key, {out.id, 0});
    return out;
}

GameRef phi0(Workspace& ws, PartizanRef p) { return phi(ws, p, Parity::Even); }
GameRef phi1(Workspace& ws, PartizanRef p) { return phi(ws, p, Parity::Odd); }

}  // namespace wts

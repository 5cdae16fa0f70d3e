#include "wts/canonical.hpp"

#include <algorithm>

#include "wts/checked.hpp"
#include "wts/core.hpp"
#include "wts/detail/ops.hpp"
#include "wts/error.hpp"
#include "wts/maps.hpp"
#include "wts/order.hpp"

namespace wts {

namespace {

bool at_least(GameStore& store, GameRef a, GameRef b) {
    Comparison c = compare_invertible(store, a, b);
    return c == Comparison::Greater || c == Comparison::Equal;
}

void normalize(std::vector<GameRef>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index of a dominated option on the given side, or -1.
int find_dominated(GameStore& store, const std::vector<GameRef>& opts, bool left_side) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
        for (std::size_t j = 0; j < opts.size(); ++j) {
            if (i == j) continue;
            bool beaten = left_side ? at_least(store, opts[j], opts[i]) : at_least(store, opts[i], opts[j]);
            if (beaten) return static_cast<int>(i);
        }
    }
    return -1;
}

std::optional<GameRef> integer_equivalent(GameStore& store, GameRef h) {
    Outcome oc = store.outcome(h);
    if (oc.parity != Parity::Even || oc.left != oc.right) return std::nullopt;
    GameRef n = store.leaf(oc.left);
    if (compare_invertible(store, h, n) == Comparison::Equal) return n;
    return std::nullopt;
}

// Bypasses one reversible option. A left option reversing through a leaf
// has nothing to bypass to; it is dropped when that keeps the value.
bool bypass_one(GameStore& store, std::vector<GameRef>& left, std::vector<GameRef>& right) {
    GameRef whole = store.make_game(left, right);
    for (int side = 0; side < 2; ++side) {
        bool is_left = side == 0;
        std::vector<GameRef>& opts = is_left ? left : right;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            const auto& backs = is_left ? store.right_options(opts[i]) : store.left_options(opts[i]);
            for (GameRef back : backs) {
                bool reverses = is_left ? at_least(store, whole, back) : at_least(store, back, whole);
                if (!reverses) continue;
                std::vector<GameRef> next(opts.begin(), opts.begin() + static_cast<long>(i));
                next.insert(next.end(), opts.begin() + static_cast<long>(i) + 1, opts.end());
                if (!store.is_leaf(back)) {
                    const auto& repl = is_left ? store.left_options(back) : store.right_options(back);
                    next.insert(next.end(), repl.begin(), repl.end());
                } else {
                    if (next.empty()) continue;
                    GameRef trial = is_left ? store.make_game(next, right) : store.make_game(left, next);
                    if (compare_invertible(store, trial, whole) != Comparison::Equal) continue;
                }
                normalize(next);
                opts = std::move(next);
                return true;
            }
        }
    }
    return false;
}

GameRef simplify(GameStore& store, GameRef g) {
    const GameNode& n = store.node(g);
    if (n.leaf) return g;
    detail::MemoKey key{detail::kCanonical, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return GameRef{static_cast<std::uint32_t>(hit->first)};
    std::vector<GameRef> left, right;
    for (GameRef o : n.left) left.push_back(simplify(store, o));
    for (GameRef o : n.right) right.push_back(simplify(store, o));
    normalize(left);
    normalize(right);
    GameRef out;
    while (true) {
        GameRef current = store.make_game(left, right);
        if (auto leaf = integer_equivalent(store, current)) {
            out = *leaf;
            break;
        }
        int i = find_dominated(store, left, true);
        if (i >= 0) {
            left.erase(left.begin() + i);
            continue;
        }
        i = find_dominated(store, right, false);
        if (i >= 0) {
            right.erase(right.begin() + i);
            continue;
        }
        if (!bypass_one(store, left, right)) {
            out = current;
            break;
        }
    }
    store.memo().put(key, {out.id, 0});
    store.memo().put({detail::kCanonical, out.id, 0, 0}, {out.id, 0});
    return out;
}

GameRef to_invertible_class(GameStore& store, GameRef g) {
    if (in_invertible_class(store, g)) return g;
    if (!invertible(store, g)) throw Error(ErrorCode::NotInvertible, "game has no canonical form");
    return upside(store, g);
}

}  // namespace

GameRef canonical_form(GameStore& store, GameRef g) {
    return simplify(store, to_invertible_class(store, g));
}

std::int64_t heating_to_j(const GameStore& store, GameRef g) {
    auto odd = store.gaps(g).odd;
    if (!odd || *odd <= 2) return 0;
    return (*odd - 2 + 1) / 2;
}

GameRef canonical_form_via_psi(Workspace& ws, GameRef g) {
    GameRef base = to_invertible_class(ws.games, g);
    std::int64_t t = heating_to_j(ws.games, base);
    GameRef hot = heat(ws.games, base, t);
    PartizanRef x = p_canonical(ws.partizan, psi(ws, hot));
    GameRef k = phi(ws, x, ws.games.parity(base));
    return heat(ws.games, k, checked_neg(t));
}

bool is_canonical(GameStore& store, GameRef g) {
    if (!in_invertible_class(store, g)) throw Error(ErrorCode::NotInI, "is_canonical needs a game in class I");
    for (GameRef s : subgames(store, g)) {
        const GameNode& n = store.node(s);
        if (n.leaf) continue;
        if (find_dominated(store, n.left, true) >= 0) return false;
        if (find_dominated(store, n.right, false) >= 0) return false;
        for (GameRef o : n.left)
            for (GameRef back : store.right_options(o))
                if (at_least(store, s, back)) return false;
        for (GameRef o : n.right)
            for (GameRef back : store.left_options(o))
                if (at_least(store, back, s)) return false;
    }
    return true;
}

}  // namespace wts

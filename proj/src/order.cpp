#include "wts/order.hpp"

#include <algorithm>
#include <limits>

#include "wts/canonical.hpp"
#include "wts/checked.hpp"
#include "wts/core.hpp"
#include "wts/detail/ops.hpp"
#include "wts/error.hpp"

namespace wts {

namespace {

// Comparison encoded in a memo slot: bit 0 for >=, bit 1 for <=.
Comparison decode(std::int64_t bits) {
    switch (bits) {
        case 3: return Comparison::Equal;
        case 1: return Comparison::Greater;
        case 2: return Comparison::Less;
        default: return Comparison::Incomparable;
    }
}

}  // namespace

const char* comparison_name(Comparison c) {
    switch (c) {
        case Comparison::Less: return "less";
        case Comparison::Equal: return "equivalent";
        case Comparison::Greater: return "greater";
        case Comparison::Incomparable: return "incomparable";
    }
    return "incomparable";
}

bool in_invertible_class(const GameStore& store, GameRef g) { return store.gaps(g).even == 0; }

bool in_j(const GameStore& store, GameRef g) {
    Gaps gaps = store.gaps(g);
    return gaps.even == 0 && (!gaps.odd || *gaps.odd <= 2);
}

bool in_k(GameStore& store, GameRef g) {
    for (GameRef s : subgames(store, g)) {
        for (GameRef side : {upside(store, s), downside(store, s)}) {
            if (in_j(store, side)) continue;
            // The canonical form lies in J whenever any equivalent game does.
            if (!in_j(store, canonical_form(store, side))) return false;
        }
    }
    return true;
}

GameRef upside(GameStore& store, GameRef g) {
    const GameNode& n = store.node(g);
    if (n.leaf) return g;
    detail::MemoKey key{detail::kUpside, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return GameRef{static_cast<std::uint32_t>(hit->first)};
    std::vector<GameRef> left, right;
    for (GameRef o : n.left) left.push_back(upside(store, o));
    for (GameRef o : n.right) right.push_back(upside(store, o));
    GameRef h = store.make_game(std::move(left), std::move(right));
    Outcome oc = store.outcome(h);
    GameRef out = (oc.parity == Parity::Even && oc.left < oc.right) ? store.leaf(oc.right) : h;
    store.memo().put(key, {out.id, 0});
    return out;
}

GameRef downside(GameStore& store, GameRef g) {
    return negate(store, upside(store, negate(store, g)));
}

Outcome sum_outcome(GameStore& store, GameRef g, GameRef h) {
    const GameNode& a = store.node(g);
    const GameNode& b = store.node(h);
    Parity parity = add_parity(a.parity, b.parity);
    if (a.leaf && b.leaf) {
        std::int64_t v = checked_add(a.score, b.score);
        return {v, v, parity};
    }
    if (b.leaf) return {checked_add(a.left_outcome, b.score), checked_add(a.right_outcome, b.score), parity};
    if (a.leaf) return {checked_add(b.left_outcome, a.score), checked_add(b.right_outcome, a.score), parity};
    detail::MemoKey key{detail::kSumOutcome, g.id, h.id, 0};
    if (auto hit = store.memo().find(key)) return {hit->first, hit->second, parity};
    std::int64_t best_left = std::numeric_limits<std::int64_t>::min();
    std::int64_t best_right = std::numeric_limits<std::int64_t>::max();
    for (GameRef o : a.left) best_left = std::max(best_left, sum_outcome(store, o, h).right);
    for (GameRef o : b.left) best_left = std::max(best_left, sum_outcome(store, g, o).right);
    for (GameRef o : a.right) best_right = std::min(best_right, sum_outcome(store, o, h).left);
    for (GameRef o : b.right) best_right = std::min(best_right, sum_outcome(store, g, o).left);
    store.memo().put(key, {best_left, best_right});
    return {best_left, best_right, parity};
}

namespace {

bool left_at_least(GameStore& store, GameRef g, GameRef h, std::int64_t bound);

// R(g + h) >= bound, searched with short-circuiting instead of full minimax.
bool right_at_least(GameStore& store, GameRef g, GameRef h, std::int64_t bound) {
    const GameNode& a = store.node(g);
    const GameNode& b = store.node(h);
    if (b.leaf) return checked_add(a.right_outcome, b.score) >= bound;
    if (a.leaf) return checked_add(b.right_outcome, a.score) >= bound;
    if (checked_add(a.min_value, b.min_value) >= bound) return true;
    if (checked_add(a.max_value, b.max_value) < bound) return false;
    detail::MemoKey key{detail::kRightAtLeast, g.id, h.id, bound};
    if (auto hit = store.memo().find(key)) return hit->first != 0;
    bool ok = true;
    for (GameRef o : a.right)
        if (!(ok = left_at_least(store, o, h, bound))) break;
    if (ok)
        for (GameRef o : b.right)
            if (!(ok = left_at_least(store, g, o, bound))) break;
    store.memo().put(key, {ok ? 1 : 0, 0});
    return ok;
}

// L(g + h) >= bound.
bool left_at_least(GameStore& store, GameRef g, GameRef h, std::int64_t bound) {
    const GameNode& a = store.node(g);
    const GameNode& b = store.node(h);
    if (b.leaf) return checked_add(a.left_outcome, b.score) >= bound;
    if (a.leaf) return checked_add(b.left_outcome, a.score) >= bound;
    if (checked_add(a.min_value, b.min_value) >= bound) return true;
    if (checked_add(a.max_value, b.max_value) < bound) return false;
    detail::MemoKey key{detail::kLeftAtLeast, g.id, h.id, bound};
    if (auto hit = store.memo().find(key)) return hit->first != 0;
    bool ok = false;
    for (GameRef o : a.left)
        if ((ok = right_at_least(store, o, h, bound))) break;
    if (!ok)
        for (GameRef o : b.left)
            if ((ok = right_at_least(store, g, o, bound))) break;
    store.memo().put(key, {ok ? 1 : 0, 0});
    return ok;
}

}  // namespace

Comparison compare_invertible(GameStore& store, GameRef x, GameRef y) {
    if (!in_invertible_class(store, x) || !in_invertible_class(store, y))
        throw Error(ErrorCode::NotInI, "comparison needs games in class I");
    if (store.parity(x) != store.parity(y)) return Comparison::Incomparable;
    if (x == y) return Comparison::Equal;
    detail::MemoKey key{detail::kCompare, x.id, y.id, 0};
    if (auto hit = store.memo().find(key)) return decode(hit->first);
    bool greater = right_at_least(store, x, negate(store, y), 0);
    bool less = right_at_least(store, y, negate(store, x), 0);
    std::int64_t bits = (greater ? 1 : 0) | (less ? 2 : 0);
    store.memo().put(key, {bits, 0});
    return decode(bits);
}

namespace {

bool side_ge(GameStore& store, GameRef a, GameRef b) {
    Comparison c = compare_invertible(store, a, b);
    return c == Comparison::Equal || c == Comparison::Greater;
}

}  // namespace

bool ge_plus(GameStore& store, GameRef g, GameRef h) {
    if (store.parity(g) != store.parity(h)) return false;
    return side_ge(store, upside(store, g), upside(store, h));
}

bool ge_minus(GameStore& store, GameRef g, GameRef h) {
    if (store.parity(g) != store.parity(h)) return false;
    return side_ge(store, downside(store, g), downside(store, h));
}

bool ge(GameStore& store, GameRef g, GameRef h) {
    return ge_plus(store, g, h) && ge_minus(store, g, h);
}

bool le(GameStore& store, GameRef g, GameRef h) { return ge(store, h, g); }

bool equivalent(GameStore& store, GameRef g, GameRef h) {
    return g == h || (ge(store, g, h) && ge(store, h, g));
}

Comparison compare(GameStore& store, GameRef g, GameRef h) {
    bool a = ge(store, g, h);
    bool b = ge(store, h, g);
    if (a && b) return Comparison::Equal;
    if (a) return Comparison::Greater;
    if (b) return Comparison::Less;
    return Comparison::Incomparable;
}

bool equivalent_plus(GameStore& store, GameRef g, GameRef h) {
    return ge_plus(store, g, h) && ge_plus(store, h, g);
}

bool equivalent_minus(GameStore& store, GameRef g, GameRef h) {
    return ge_minus(store, g, h) && ge_minus(store, h, g);
}

bool invertible(GameStore& store, GameRef g) {
    return compare_invertible(store, upside(store, g), downside(store, g)) == Comparison::Equal;
}

}  // namespace wts

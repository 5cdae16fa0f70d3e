#include "wts/core.hpp"

#include <unordered_set>

#include "wts/checked.hpp"
#include "wts/detail/ops.hpp"
#include "wts/disjunctive.hpp"

namespace wts {

namespace {

std::vector<GameRef> map_options(const std::vector<GameRef>& opts, auto&& fn) {
    std::vector<GameRef> out;
    out.reserve(opts.size());
    for (GameRef o : opts) out.push_back(fn(o));
    return out;
}

}  // namespace

GameRef negate(GameStore& store, GameRef g) {
    const GameNode& n = store.node(g);
    if (n.leaf) return store.leaf(checked_neg(n.score));
    detail::MemoKey key{detail::kNegate, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return GameRef{static_cast<std::uint32_t>(hit->first)};
    auto neg = [&](GameRef o) { return negate(store, o); };
    GameRef out = store.make_game(map_options(n.right, neg), map_options(n.left, neg));
    store.memo().put(key, {out.id, 0});
    return out;
}

GameRef translate(GameStore& store, GameRef g, std::int64_t n) {
    return sum(store, g, store.leaf(n));
}

GameRef heat(GameStore& store, GameRef g, std::int64_t t) {
    const GameNode& n = store.node(g);
    if (n.leaf || t == 0) return g;
    detail::MemoKey key{detail::kHeat, g.id, 0, t};
    if (auto hit = store.memo().find(key)) return GameRef{static_cast<std::uint32_t>(hit->first)};
    std::int64_t cool = checked_neg(t);
    GameRef out = store.make_game(
        map_options(n.left, [&](GameRef o) { return translate(store, heat(store, o, t), t); }),
        map_options(n.right,
                    [&](GameRef o) { return translate(store, heat(store, o, t), cool); }));
    store.memo().put(key, {out.id, 0});
    return out;
}

GameRef star(GameStore& store) {
    GameRef zero = store.leaf(0);
    return store.make_game({zero}, {zero});
}

GameRef q_gadget(GameStore& store, std::int64_t n) {
    GameRef zero = store.leaf(0);
    GameRef top = store.leaf(n);
    return store.make_game({store.make_game({zero}, {zero})}, {store.make_game({top}, {top})});
}

GameRef even_projection(GameStore& store, GameRef g) {
    if (store.parity(g) == Parity::Even) return g;
    return sum(store, g, star(store));
}

std::vector<GameRef> subgames(const GameStore& store, GameRef g) {
    std::vector<GameRef> order;
    std::unordered_set<GameRef> seen;
    std::vector<GameRef> stack{g};
    while (!stack.empty()) {
        GameRef cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        order.push_back(cur);
        const GameNode& n = store.node(cur);
        for (auto it = n.right.rbegin(); it != n.right.rend(); ++it) stack.push_back(*it);
        for (auto it = n.left.rbegin(); it != n.left.rend(); ++it) stack.push_back(*it);
    }
    return order;
}

std::set<std::int64_t> value_set(const GameStore& store, GameRef g) {
    std::set<std::int64_t> out;
    for (GameRef s : subgames(store, g))
        if (store.is_leaf(s)) out.insert(store.score(s));
    return out;
}

bool is_s_valued(const GameStore& store, GameRef g, const std::set<std::int64_t>& values) {
    for (std::int64_t v : value_set(store, g))
        if (!values.contains(v)) return false;
    return true;
}

}  // namespace wts

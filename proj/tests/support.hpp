#pragma once

// Shared test helpers: seeded generators and an explicit-tree oracle that
// never touches the store's memo tables.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wts/game_store.hpp"
#include "wts/partizan.hpp"

namespace wts::test {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct GameShape {
    int depth = 3;
    std::int64_t lo = -3;
    std::int64_t hi = 3;
    int width = 2;
    double leaf_bias = 0.3;
};

// Random well-tempered game of the requested parity. Odd games always have
// at least one move; even games may stop early at a leaf.
inline GameRef random_game(GameStore& store, Rng& rng, const GameShape& s, Parity parity) {
    if (parity == Parity::Even && (s.depth <= 0 || coin(rng, s.leaf_bias)))
        return store.leaf(uniform(rng, s.lo, s.hi));
    GameShape sub = s;
    sub.depth = std::max(0, s.depth - 1);
    auto side = [&] {
        std::vector<GameRef> out;
        int n = static_cast<int>(uniform(rng, 1, s.width));
        for (int i = 0; i < n; ++i) out.push_back(random_game(store, rng, sub, flip(parity)));
        return out;
    };
    auto left = side();
    auto right = side();
    return store.make_game(std::move(left), std::move(right));
}

inline GameRef random_game(GameStore& store, Rng& rng, const GameShape& s) {
    return random_game(store, rng, s, coin(rng) ? Parity::Odd : Parity::Even);
}

inline PartizanRef random_partizan(PartizanStore& store, Rng& rng, int depth, int width = 2) {
    if (depth <= 0) return store.make({}, {});
    auto side = [&] {
        std::vector<PartizanRef> out;
        int n = static_cast<int>(uniform(rng, 0, width));
        for (int i = 0; i < n; ++i) out.push_back(random_partizan(store, rng, depth - 1, width));
        return out;
    };
    auto left = side();
    auto right = side();
    return store.make(std::move(left), std::move(right));
}

// All-small: every nonempty position has options for both players or neither.
inline PartizanRef random_all_small(PartizanStore& store, Rng& rng, int depth, int width = 2) {
    if (depth <= 0 || coin(rng, 0.25)) return store.make({}, {});
    auto side = [&] {
        std::vector<PartizanRef> out;
        int n = static_cast<int>(uniform(rng, 1, width));
        for (int i = 0; i < n; ++i) out.push_back(random_all_small(store, rng, depth - 1, width));
        return out;
    };
    auto left = side();
    auto right = side();
    return store.make(std::move(left), std::move(right));
}

// ---- explicit tree oracle ----

struct Tree {
    bool leaf = true;
    std::int64_t score = 0;
    std::vector<Tree> left;
    std::vector<Tree> right;
};

inline Tree to_tree(const GameStore& store, GameRef g) {
    Tree t;
    if (store.is_leaf(g)) {
        t.score = store.score(g);
        return t;
    }
    t.leaf = false;
    for (auto o : store.left_options(g)) t.left.push_back(to_tree(store, o));
    for (auto o : store.right_options(g)) t.right.push_back(to_tree(store, o));
    return t;
}

// Plain minimax. Returns {Left first, Right first}.
inline std::pair<std::int64_t, std::int64_t> tree_outcome(const Tree& t) {
    if (t.leaf) return {t.score, t.score};
    std::int64_t l = INT64_MIN;
    for (const auto& o : t.left) l = std::max(l, tree_outcome(o).second);
    std::int64_t r = INT64_MAX;
    for (const auto& o : t.right) r = std::min(r, tree_outcome(o).first);
    return {l, r};
}

inline Tree tree_sum(const Tree& a, const Tree& b) {
    if (a.leaf && b.leaf) return Tree{true, a.score + b.score, {}, {}};
    Tree t;
    t.leaf = false;
    for (const auto& o : a.left) t.left.push_back(tree_sum(o, b));
    for (const auto& o : b.left) t.left.push_back(tree_sum(a, o));
    for (const auto& o : a.right) t.right.push_back(tree_sum(o, b));
    for (const auto& o : b.right) t.right.push_back(tree_sum(a, o));
    return t;
}

inline Tree tree_neg(const Tree& a) {
    if (a.leaf) return Tree{true, -a.score, {}, {}};
    Tree t;
    t.leaf = false;
    for (const auto& o : a.right) t.left.push_back(tree_neg(o));
    for (const auto& o : a.left) t.right.push_back(tree_neg(o));
    return t;
}

inline int tree_parity(const Tree& t) {
    return t.leaf ? 0 : 1 - tree_parity(t.left.front());
}

// Lf / Rf from the explicit tree.
inline std::int64_t tree_lf(const Tree& t) {
    auto [l, r] = tree_outcome(t);
    return tree_parity(t) == 1 ? l : r;
}
inline std::int64_t tree_rf(const Tree& t) {
    auto [l, r] = tree_outcome(t);
    return tree_parity(t) == 1 ? r : l;
}

// gap_i as the max of R - L over subgames of parity i; nullopt = no such subgame.
inline void tree_gaps(const Tree& t, std::optional<std::int64_t>& g0, std::optional<std::int64_t>& g1) {
    auto [l, r] = tree_outcome(t);
    auto& slot = tree_parity(t) == 0 ? g0 : g1;
    slot = std::max(slot.value_or(INT64_MIN), r - l);
    for (const auto& o : t.left) tree_gaps(o, g0, g1);
    for (const auto& o : t.right) tree_gaps(o, g0, g1);
}

// ---- partizan oracle: textbook comparison on explicit forms, no memo ----

struct PTree {
    std::vector<PTree> left;
    std::vector<PTree> right;
};

inline PTree to_ptree(const PartizanStore& store, PartizanRef g) {
    PTree t;
    for (auto o : store.left_options(g)) t.left.push_back(to_ptree(store, o));
    for (auto o : store.right_options(g)) t.right.push_back(to_ptree(store, o));
    return t;
}

inline bool ptree_leq(const PTree& g, const PTree& h) {
    for (const auto& gl : g.left)
        if (ptree_leq(h, gl)) return false;
    for (const auto& hr : h.right)
        if (ptree_leq(hr, g)) return false;
    return true;
}

inline PTree ptree_sum(const PTree& a, const PTree& b) {
    PTree t;
    for (const auto& o : a.left) t.left.push_back(ptree_sum(o, b));
    for (const auto& o : b.left) t.left.push_back(ptree_sum(a, o));
    for (const auto& o : a.right) t.right.push_back(ptree_sum(o, b));
    for (const auto& o : b.right) t.right.push_back(ptree_sum(a, o));
    return t;
}

inline PTree ptree_int(std::int64_t n) {
    PTree t;
    if (n > 0) t.left.push_back(ptree_int(n - 1));
    if (n < 0) t.right.push_back(ptree_int(n + 1));
    return t;
}

inline bool ptree_eq(const PTree& a, const PTree& b) { return ptree_leq(a, b) && ptree_leq(b, a); }

}  // namespace wts::test

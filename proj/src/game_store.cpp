#include "wts/game_store.hpp"

#include <algorithm>
#include <limits>

#include "wts/checked.hpp"
#include "wts/error.hpp"

namespace wts {

std::size_t GameStore::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = k.leaf ? 0x51ed27ULL : 0xa24baeULL;
    auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::uint64_t>(k.score));
    for (GameRef g : k.left) mix(g.id);
    mix(0xffffffffULL);
    for (GameRef g : k.right) mix(g.id);
    return static_cast<std::size_t>(h);
}

Outcome GameStore::outcome(GameRef g) const {
    const GameNode& n = node(g);
    return {n.left_outcome, n.right_outcome, n.parity};
}

GameRef GameStore::leaf(std::int64_t score) {
    GameNode n;
    n.leaf = true;
    n.score = score;
    n.parity = Parity::Even;
    n.left_outcome = n.right_outcome = score;
    n.gaps = Gaps{0, std::nullopt};
    n.min_value = n.max_value = score;
    n.height = 0;
    return intern(std::move(n));
}

GameRef GameStore::make_game(std::vector<GameRef> left, std::vector<GameRef> right) {
    if (left.empty() || right.empty())
        throw Error(ErrorCode::EmptyOptionSet, "both option sets must be nonempty");
    auto normalize = [](std::vector<GameRef>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(left);
    normalize(right);

    Parity option_parity = parity(left.front());
    for (const auto* side : {&left, &right})
        for (GameRef o : *side)
            if (parity(o) != option_parity)
                throw Error(ErrorCode::MixedParity, "options must share one parity");

    GameNode n;
    n.leaf = false;
    n.parity = flip(option_parity);
    n.left_outcome = std::numeric_limits<std::int64_t>::min();
    n.right_outcome = std::numeric_limits<std::int64_t>::max();
    n.min_value = std::numeric_limits<std::int64_t>::max();
    n.max_value = std::numeric_limits<std::int64_t>::min();
    std::int64_t gap_even = std::numeric_limits<std::int64_t>::min();
    std::optional<std::int64_t> gap_odd;
    auto absorb = [&](GameRef o) {
        const GameNode& c = node(o);
        gap_even = std::max(gap_even, c.gaps.even);
        if (c.gaps.odd && (!gap_odd || *c.gaps.odd > *gap_odd)) gap_odd = c.gaps.odd;
        n.min_value = std::min(n.min_value, c.min_value);
        n.max_value = std::max(n.max_value, c.max_value);
        n.height = std::max(n.height, c.height + 1);
    };
    for (GameRef o : left) {
        absorb(o);
        n.left_outcome = std::max(n.left_outcome, node(o).right_outcome);
    }
    for (GameRef o : right) {
        absorb(o);
        n.right_outcome = std::min(n.right_outcome, node(o).left_outcome);
    }
    std::int64_t own = checked_sub(n.right_outcome, n.left_outcome);
    if (n.parity == Parity::Even) {
        gap_even = std::max(gap_even, own);
    } else if (!gap_odd || own > *gap_odd) {
        gap_odd = own;
    }
    n.gaps = Gaps{gap_even, gap_odd};
    n.left = std::move(left);
    n.right = std::move(right);
    return intern(std::move(n));
}

GameRef GameStore::intern(GameNode n) {
    Key key{n.leaf, n.leaf ? n.score : 0, n.left, n.right};
    std::lock_guard lock(intern_mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return GameRef{it->second};
    std::uint32_t id = nodes_.push(std::move(n));
    index_.emplace(std::move(key), id);
    return GameRef{id};
}

}  // namespace wts

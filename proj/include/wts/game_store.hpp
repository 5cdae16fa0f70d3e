#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wts/detail/arena.hpp"
#include "wts/detail/memo.hpp"

namespace wts {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity add_parity(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

// Handle to a node of a GameStore. Equal refs mean structurally identical
// games, provided both came from the same store.
struct GameRef {
    std::uint32_t id = 0;
    auto operator<=>(const GameRef&) const = default;
};

struct Outcome {
    std::int64_t left = 0;   // Left moves first
    std::int64_t right = 0;  // Right moves first
    Parity parity = Parity::Even;

    // Outcome when the given player makes the last move.
    std::int64_t left_final() const { return parity == Parity::Odd ? left : right; }
    std::int64_t right_final() const { return parity == Parity::Odd ? right : left; }

    bool operator==(const Outcome&) const = default;
};

// Odd gap is absent (minus infinity) when a game has no odd subgames.
struct Gaps {
    std::int64_t even = 0;
    std::optional<std::int64_t> odd;

    bool operator==(const Gaps&) const = default;
};

struct GameNode {
    bool leaf = true;
    std::int64_t score = 0;
    std::vector<GameRef> left;
    std::vector<GameRef> right;
    Parity parity = Parity::Even;
    std::int64_t left_outcome = 0;
    std::int64_t right_outcome = 0;
    Gaps gaps;
    std::int64_t min_value = 0;
    std::int64_t max_value = 0;
    std::uint32_t height = 0;
};

// Hash-consed store of well-tempered scoring games. Construction and all
// memo tables are safe to use from several threads at once.
class GameStore {
public:
    GameStore() = default;
    GameStore(const GameStore&) = delete;
    GameStore& operator=(const GameStore&) = delete;

    GameRef leaf(std::int64_t score);
    // Options are deduplicated and sorted by id. Throws EmptyOptionSet or
    // MixedParity.
    GameRef make_game(std::vector<GameRef> left, std::vector<GameRef> right);

    const GameNode& node(GameRef g) const { return nodes_[g.id]; }
    bool is_leaf(GameRef g) const { return node(g).leaf; }
    std::int64_t score(GameRef g) const { return node(g).score; }
    Parity parity(GameRef g) const { return node(g).parity; }
    const std::vector<GameRef>& left_options(GameRef g) const { return node(g).left; }
    const std::vector<GameRef>& right_options(GameRef g) const { return node(g).right; }
    Outcome outcome(GameRef g) const;
    Gaps gaps(GameRef g) const { return node(g).gaps; }

    std::size_t size() const { return nodes_.size(); }
    bool owns(GameRef g) const { return g.id < nodes_.size(); }

    detail::MemoTable& memo() { return memo_; }

private:
    struct Key {
        bool leaf;
        std::int64_t score;
        std::vector<GameRef> left;
        std::vector<GameRef> right;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    GameRef intern(GameNode node);

    detail::Arena<GameNode> nodes_;
    std::mutex intern_mutex_;
    std::unordered_map<Key, std::uint32_t, KeyHash> index_;
    detail::MemoTable memo_;
};

}  // namespace wts

template <>
struct std::hash<wts::GameRef> {
    std::size_t operator()(wts::GameRef g) const noexcept { return std::hash<std::uint32_t>{}(g.id); }
};

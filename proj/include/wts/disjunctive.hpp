#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "wts/game_store.hpp"

namespace wts {

// Order-preserving function on a finite product of integer domains,
// tabulated at construction.
class Combiner {
public:
    using Fn = std::function<std::int64_t(std::span<const std::int64_t>)>;
    using Entry = std::pair<std::vector<std::int64_t>, std::int64_t>;

    // Throws NotOrderPreserving if fn is not monotone in every argument.
    Combiner(std::vector<std::vector<std::int64_t>> domains, const Fn& fn);
    // Table must list every tuple of the product exactly once.
    static Combiner from_table(std::vector<std::vector<std::int64_t>> domains,
                               const std::vector<Entry>& entries);

    std::size_t arity() const { return domains_.size(); }
    const std::vector<std::vector<std::int64_t>>& domains() const { return domains_; }
    std::int64_t operator()(std::span<const std::int64_t> args) const;
    std::vector<Entry> entries() const;

private:
    Combiner() = default;
    std::size_t index_of(std::span<const std::int64_t> args) const;
    void validate();

    std::vector<std::vector<std::int64_t>> domains_;
    std::vector<std::int64_t> table_;
};

// Applies f leafwise through the disjunctive compound of gs.
GameRef extend(GameStore& store, const Combiner& f, std::span<const GameRef> gs);

GameRef sum(GameStore& store, GameRef g, GameRef h);
GameRef diff(GameStore& store, GameRef g, GameRef h);
// Boolean extensions of max and min; inputs must be {0,1}-valued.
GameRef or_op(GameStore& store, GameRef g, GameRef h);
GameRef and_op(GameStore& store, GameRef g, GameRef h);
// Extension of clamp(i + j, -1, 1); inputs must be {-1,0,1}-valued.
GameRef star_op(GameStore& store, GameRef g, GameRef h);
// Rounds every leaf to the nearest element of values, ties downward.
GameRef round_to_set(GameStore& store, GameRef g, const std::set<std::int64_t>& values);

// Builds a game whose upside is equivalent to up and downside to down.
// Requires up >= down, equal parities, both invertible. When values is given
// the result is rounded onto it.
GameRef ampersand(GameStore& store, GameRef up, GameRef down,
                  const std::optional<std::set<std::int64_t>>& values = std::nullopt);

}  // namespace wts

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wts/detail/arena.hpp"
#include "wts/detail/memo.hpp"
#include "wts/dyadic.hpp"

namespace wts {

struct PartizanRef {
    std::uint32_t id = 0;
    auto operator<=>(const PartizanRef&) const = default;
};

struct PartizanNode {
    std::vector<PartizanRef> left;
    std::vector<PartizanRef> right;
    std::uint32_t height = 0;
};

// Hash-consed store of short normal-play games. Option sets may be empty.
class PartizanStore {
public:
    PartizanStore() = default;
    PartizanStore(const PartizanStore&) = delete;
    PartizanStore& operator=(const PartizanStore&) = delete;

    PartizanRef make(std::vector<PartizanRef> left, std::vector<PartizanRef> right);
    const PartizanNode& node(PartizanRef g) const { return nodes_[g.id]; }
    const std::vector<PartizanRef>& left_options(PartizanRef g) const { return node(g).left; }
    const std::vector<PartizanRef>& right_options(PartizanRef g) const { return node(g).right; }
    std::size_t size() const { return nodes_.size(); }

    detail::MemoTable& memo() { return memo_; }

private:
    struct Key {
        std::vector<PartizanRef> left;
        std::vector<PartizanRef> right;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    detail::Arena<PartizanNode> nodes_;
    std::mutex intern_mutex_;
    std::unordered_map<Key, std::uint32_t, KeyHash> index_;
    detail::MemoTable memo_;
};

enum class PComparison { Less, Equal, Greater, Fuzzy };

// Canonical forms of numbers and of *.
PartizanRef p_int(PartizanStore& store, std::int64_t n);
PartizanRef p_number(PartizanStore& store, const Dyadic& x);
PartizanRef p_star(PartizanStore& store);

bool p_leq(PartizanStore& store, PartizanRef g, PartizanRef h);
bool p_eq(PartizanStore& store, PartizanRef g, PartizanRef h);
// g is less than or confused with h, that is, not g >= h.
bool p_lf(PartizanStore& store, PartizanRef g, PartizanRef h);
PComparison p_compare(PartizanStore& store, PartizanRef g, PartizanRef h);

PartizanRef p_sum(PartizanStore& store, PartizanRef g, PartizanRef h);
PartizanRef p_neg(PartizanStore& store, PartizanRef g);
PartizanRef p_diff(PartizanStore& store, PartizanRef g, PartizanRef h);

// Removes dominated options and bypasses reversible ones until neither
// applies. Equal values give identical refs.
PartizanRef p_canonical(PartizanStore& store, PartizanRef g);

// Value-level tests: the number or integer g equals, if any.
std::optional<Dyadic> p_as_number(PartizanStore& store, PartizanRef g);
std::optional<std::int64_t> p_as_integer(PartizanStore& store, PartizanRef g);

Dyadic left_stop(PartizanStore& store, PartizanRef g);
Dyadic right_stop(PartizanStore& store, PartizanRef g);

// {L|R}+ is the largest integer n with every left option below or confused
// with n and n below or confused with every right option; {L|R}- the
// smallest. Without such an integer both return the plain game {L|R}.
PartizanRef bracket_plus(PartizanStore& store, const std::vector<PartizanRef>& left,
                         const std::vector<PartizanRef>& right);
PartizanRef bracket_minus(PartizanStore& store, const std::vector<PartizanRef>& left,
                          const std::vector<PartizanRef>& right);

// Overheating from 1 to t: integers are fixed, otherwise
// {overheat(L) + t | overheat(R) - t}. Result is canonical.
PartizanRef overheat(PartizanStore& store, PartizanRef g, PartizanRef t);

}  // namespace wts

template <>
struct std::hash<wts::PartizanRef> {
    std::size_t operator()(wts::PartizanRef g) const noexcept {
        return std::hash<std::uint32_t>{}(g.id);
    }
};

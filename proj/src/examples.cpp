#include "wts/examples.hpp"

#include <charconv>
#include <numeric>
#include <string>
#include <unordered_map>

#include "wts/checked.hpp"
#include "wts/error.hpp"

namespace wts {

TruthTable TruthTable::parse(int n, std::string_view bits) {
    if (n < 1 || n > 20) throw Error(ErrorCode::TooLarge, "input count must be in 1..20");
    std::size_t expected = std::size_t{1} << n;
    if (bits.size() != expected)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(expected) + " truth table bits");
    TruthTable f;
    f.n = n;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw SyntaxError(i, "truth table bits must be 0 or 1");
        f.bits.push_back(static_cast<std::uint8_t>(bits[i] - '0'));
    }
    return f;
}

GameRef input_setting_game(GameStore& store, const TruthTable& f) {
    if (f.n < 1 || f.n > 20 || f.bits.size() != (std::size_t{1} << f.n))
        throw Error(ErrorCode::InvalidArgument, "malformed truth table");
    std::unordered_map<std::uint64_t, GameRef> memo;
    std::uint32_t full = (std::uint32_t{1} << f.n) - 1;
    auto build = [&](auto&& self, std::uint32_t set, std::uint32_t values) -> GameRef {
        std::uint64_t key = (std::uint64_t{set} << 32) | values;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        GameRef out;
        if (set == full) {
            out = store.leaf(f.at(values));
        } else {
            std::vector<GameRef> moves;
            for (int v = 0; v < f.n; ++v) {
                std::uint32_t bit = std::uint32_t{1} << v;
                if (set & bit) continue;
                moves.push_back(self(self, set | bit, values));
                moves.push_back(self(self, set | bit, values | bit));
            }
            out = store.make_game(moves, moves);
        }
        memo.emplace(key, out);
        return out;
    };
    return build(build, 0, 0);
}

TwistVector parse_twists(std::string_view text) {
    TwistVector out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view part = text.substr(pos, comma - pos);
        std::int64_t v = -1;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v < 0)
            throw SyntaxError(pos, "expected a nonnegative integer");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

std::int64_t tangle_numerator(const std::vector<std::int64_t>& sums) {
    std::int64_t p = 1, q = 0;
    for (auto it = sums.rbegin(); it != sums.rend(); ++it) {
        std::int64_t next = checked_add(checked_mul(*it, p), q);
        q = p;
        p = next;
    }
    return p;
}

GameRef shadow_game_brute(GameStore& store, const TwistVector& t) {
    if (t.empty()) throw Error(ErrorCode::InvalidArgument, "twist vector is empty");
    std::int64_t total = 0;
    for (std::int64_t n : t) {
        if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative crossing count");
        total += n;
        if (total > 12) throw Error(ErrorCode::TooLarge, "more than 12 crossings");
    }
    // Region state: crossings resolved positive and negative.
    std::vector<std::int64_t> plus(t.size(), 0), minus(t.size(), 0);
    std::unordered_map<std::uint64_t, GameRef> memo;
    auto encode = [&] {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < t.size(); ++i) key = (key * 13 + plus[i]) * 13 + minus[i];
        return key;
    };
    auto build = [&](auto&& self) -> GameRef {
        std::uint64_t key = encode();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<GameRef> moves;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (plus[i] + minus[i] == t[i]) continue;
            ++plus[i];
            moves.push_back(self(self));
            --plus[i];
            ++minus[i];
            moves.push_back(self(self));
            --minus[i];
        }
        GameRef out;
        if (moves.empty()) {
            std::vector<std::int64_t> sums(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) sums[i] = plus[i] - minus[i];
            std::int64_t p = tangle_numerator(sums);
            out = store.leaf(p >= 2 || p <= -2 ? 1 : 0);
        } else {
            out = store.make_game(moves, moves);
        }
        memo.emplace(key, out);
        return out;
    };
    return build(build);
}

ShadowReduction reduce_shadow(const TwistVector& t) {
    ShadowReduction r{t, 0};
    TwistVector& v = r.minimal;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t m = v.size();
        // An interior empty region joins its neighbours.
        for (std::size_t k = 1; k + 1 < m; ++k) {
            if (v[k] == 0) {
                v[k - 1] += v[k + 1];
                v.erase(v.begin() + static_cast<long>(k), v.begin() + static_cast<long>(k) + 2);
                changed = true;
                break;
            }
        }
        if (changed || m < 2) continue;
        if (v[0] == 0 && v[1] == 0) {
            v.erase(v.begin(), v.begin() + 2);
        } else if (v[m - 1] == 0 && v[m - 2] == 0) {
            v.erase(v.end() - 2, v.end());
        } else if (v[0] == 0) {
            --v[1];
            ++r.stars;
        } else if (v[m - 1] == 0) {
            --v[m - 2];
            ++r.stars;
        } else if (v[0] == 1) {
            v[1] += 1;
            v.erase(v.begin());
        } else if (v[m - 1] == 1) {
            v[m - 2] += 1;
            v.pop_back();
        } else {
            continue;
        }
        changed = true;
    }
    return r;
}

BoolClass shadow_value_by_rule(const TwistVector& t) {
    constexpr UValue kZero = 0, kOne = 7;
    ShadowReduction r = reduce_shadow(t);
    const TwistVector& v = r.minimal;
    std::int64_t total = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    BoolClass base;
    if (total == 0) {
        // No crossings left: the diagram is fixed and unknotted.
        base = {kZero, kZero, Parity::Even};
    } else {
        bool interior_even = true;
        for (std::size_t k = 1; k + 1 < v.size(); ++k) interior_even = interior_even && v[k] % 2 == 0;
        std::int64_t ends = v.size() == 1 ? v[0] : v.front() + v.back();
        if (interior_even && ends % 2 == 1) {
            base = {kZero, kZero, Parity::Odd};
        } else {
            base = {kOne, kZero, total % 2 == 0 ? Parity::Even : Parity::Odd};
        }
    }
    if (r.stars % 2 == 1) base.parity = flip(base.parity);
    return base;
}

}  // namespace wts

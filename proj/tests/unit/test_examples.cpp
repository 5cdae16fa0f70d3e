#include <doctest.h>

#include "../support.hpp"
#include "wts/boolean.hpp"
#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/error.hpp"
#include "wts/examples.hpp"
#include "wts/notation.hpp"
#include "wts/order.hpp"

using namespace wts;
using namespace wts::test;

namespace {

UValue U(const char* name) { return *octet_index(name); }

std::string random_bits(Rng& rng, int n) {
    std::string s;
    for (int i = 0; i < (1 << n); ++i) s.push_back(coin(rng) ? '1' : '0');
    return s;
}

// Continuant numerator by the textbook left-to-right recurrence.
std::int64_t continuant(const std::vector<std::int64_t>& a) {
    std::int64_t prev = 1, cur = a.empty() ? 1 : a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::int64_t next = a[i] * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_SUITE("examples") {

TEST_CASE("input-setting games: examples") {
    GameStore s;
    CHECK(input_setting_game(s, TruthTable::parse(1, "01")) == parse_game(s, "{0,1|0,1}"));
    CHECK(input_setting_game(s, TruthTable::parse(1, "00")) == parse_game(s, "{0|0}"));
    GameRef x = input_setting_game(s, TruthTable::parse(2, "0110"));
    Outcome o = s.outcome(x);
    CHECK(o.left == 0);
    CHECK(o.right == 1);
    CHECK(o.parity == Parity::Even);
    Workspace ws;
    GameRef xw = input_setting_game(ws.games, TruthTable::parse(2, "0110"));
    CHECK(u_values(ws, xw) == BoolClass{U("1"), U("0"), Parity::Even});
    CHECK_THROWS_AS(TruthTable::parse(2, "011"), Error);
    CHECK_THROWS_AS(TruthTable::parse(1, "0a"), Error);
}

TEST_CASE("input-setting games: parity and outcome oracle") {
    GameStore s;
    Rng rng(81);
    for (int i = 0; i < 200; ++i) {
        int n = static_cast<int>(uniform(rng, 1, 4));
        auto f = TruthTable::parse(n, random_bits(rng, n));
        GameRef g = input_setting_game(s, f);
        CHECK(s.outcome(g).parity == (n % 2 ? Parity::Odd : Parity::Even));
        CHECK(is_s_valued(s, g, {0, 1}));
        // minimax over partial assignments, written out directly
        std::vector<int> state(n, -1);
        std::function<std::pair<int, int>()> solve = [&]() -> std::pair<int, int> {
            bool done = true;
            int best_l = -1, best_r = 2;
            for (int v = 0; v < n; ++v) {
                if (state[v] >= 0) continue;
                done = false;
                for (int b = 0; b < 2; ++b) {
                    state[v] = b;
                    auto [l, r] = solve();
                    best_l = std::max(best_l, r);
                    best_r = std::min(best_r, l);
                    state[v] = -1;
                }
            }
            if (done) {
                std::uint32_t idx = 0;
                for (int v = 0; v < n; ++v) idx |= static_cast<std::uint32_t>(state[v]) << v;
                int val = f.at(idx);
                return {val, val};
            }
            return {best_l, best_r};
        };
        auto [l, r] = solve();
        Outcome o = s.outcome(g);
        CHECK(o.left == l);
        CHECK(o.right == r);
    }
}

TEST_CASE("input-setting games: or of disjoint blocks") {
    GameStore s;
    Rng rng(82);
    for (int i = 0; i < 500; ++i) {
        int n1 = static_cast<int>(uniform(rng, 1, 2));
        int n2 = static_cast<int>(uniform(rng, 1, 2));
        auto f = TruthTable::parse(n1, random_bits(rng, n1));
        auto g = TruthTable::parse(n2, random_bits(rng, n2));
        std::string joint;
        for (std::uint32_t a = 0; a < (1u << (n1 + n2)); ++a) {
            std::uint32_t lo = a & ((1u << n1) - 1), hi = a >> n1;
            joint.push_back((f.at(lo) | g.at(hi)) ? '1' : '0');
        }
        GameRef whole = input_setting_game(s, TruthTable::parse(n1 + n2, joint));
        GameRef parts = or_op(s, input_setting_game(s, f), input_setting_game(s, g));
        CHECK(equivalent(s, whole, parts));
    }
}

TEST_CASE("twist parsing and the tangle numerator") {
    CHECK(parse_twists("1,2,3") == TwistVector{1, 2, 3});
    CHECK_THROWS_AS(parse_twists(""), Error);
    CHECK_THROWS_AS(parse_twists("1,-2"), Error);
    CHECK_THROWS_AS(parse_twists("1,,2"), Error);
    Rng rng(83);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::int64_t> a;
        for (int k = static_cast<int>(uniform(rng, 1, 4)); k > 0; --k) a.push_back(uniform(rng, -4, 4));
        CHECK(std::llabs(tangle_numerator(a)) == std::llabs(continuant(a)));
        std::vector<std::int64_t> rev(a.rbegin(), a.rend());
        CHECK(std::llabs(tangle_numerator(rev)) == std::llabs(tangle_numerator(a)));
    }
}

TEST_CASE("shadow examples") {
    Workspace ws;
    GameRef one = shadow_game_brute(ws.games, {1});
    CHECK(one == parse_game(ws.games, "{0|0}"));
    BoolClass star_class{U("0"), U("0"), Parity::Odd};
    CHECK(shadow_value_by_rule({1}) == star_class);
    CHECK(u_values(ws, one) == star_class);
    CHECK(shadow_value_by_rule({3}) == star_class);
    CHECK(u_values(ws, shadow_game_brute(ws.games, {3})) == star_class);
    CHECK(shadow_value_by_rule({2, 2}).parity == Parity::Even);
    CHECK(ws.games.outcome(shadow_game_brute(ws.games, {2})).parity == Parity::Even);
    CHECK_THROWS_AS(shadow_game_brute(ws.games, {5, 5, 3}), Error);
}

TEST_CASE("shadow rule agrees with brute force on the small grid") {
    Workspace ws;
    std::set<UValue> allowed{U("0"), U("1"), U("1/2"), U("1/2*")};
    int cases = 0;
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::int64_t> t(m, 0);
        for (;;) {
            std::int64_t total = 0;
            for (auto v : t) total += v;
            if (total <= 12) {
                BoolClass rule = shadow_value_by_rule(t);
                CHECK(rule == u_values(ws, shadow_game_brute(ws.games, t)));
                CHECK(allowed.count(rule.up));
                CHECK(allowed.count(rule.down));
                ++cases;
            }
            int k = 0;
            while (k < m && ++t[k] > 4) t[k++] = 0;
            if (k == m) break;
        }
    }
    CHECK(cases == 5 + 25 + 125);
}

TEST_CASE("shadow rule parity is the crossing count parity") {
    Rng rng(84);
    for (int i = 0; i < 500; ++i) {
        TwistVector t;
        for (int k = static_cast<int>(uniform(rng, 1, 5)); k > 0; --k) t.push_back(uniform(rng, 0, 6));
        auto red = reduce_shadow(t);
        std::int64_t before = 0, after = 0;
        for (auto v : t) before += v;
        for (auto v : red.minimal) after += v;
        CHECK(after <= before);
        CHECK(shadow_value_by_rule(t).parity == ((before % 2) ? Parity::Odd : Parity::Even));
    }
}

}  // TEST_SUITE

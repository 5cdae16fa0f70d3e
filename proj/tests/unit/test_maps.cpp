#include <doctest.h>

#include "../support.hpp"
#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/maps.hpp"
#include "wts/notation.hpp"
#include "wts/order.hpp"

using namespace wts;
using namespace wts::test;

namespace {

// Random game in J: either a filtered random scoring game or the image of a
// random partizan form.
GameRef random_j(Workspace& ws, Rng& rng, Parity parity) {
    for (int tries = 0; tries < 50; ++tries) {
        GameRef g = random_game(ws.games, rng, {3, -3, 3, 2, 0.3}, parity);
        if (in_j(ws.games, g)) return g;
    }
    return phi(ws, random_partizan(ws.partizan, rng, 3), parity);
}

bool p_gt(PartizanStore& s, PartizanRef g, PartizanRef h) { return p_leq(s, h, g) && !p_leq(s, g, h); }

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("psi examples") {
    Workspace ws;
    auto& s = ws.partizan;
    CHECK(p_eq(s, psi(ws, parse_game(ws.games, "{-1|1}")), p_int(s, 0)));
    GameRef hot = parse_game(ws.games, "{-2|2}");
    PartizanRef shifted = psi(ws, sum(ws.games, hot, ws.games.leaf(3)));
    CHECK(p_eq(s, shifted, p_int(s, 2)));
    // psi is not additive: psi({-2|2}) + 3 is 3, not 2
    CHECK_FALSE(p_eq(s, shifted, p_sum(s, psi(ws, hot), p_int(s, 3))));
    CHECK(psi(ws, ws.games.leaf(1)) == s.make({s.make({}, {})}, {}));
    CHECK(psi(ws, ws.games.leaf(-4)) == p_int(s, -4));
}

TEST_CASE("psi plus and minus examples") {
    Workspace ws;
    auto& s = ws.partizan;
    GameRef q2 = q_gadget(ws.games, 2);
    CHECK(p_eq(s, psi_plus(ws, q2), p_int(s, 2)));
    CHECK(p_eq(s, psi_minus(ws, q2), p_int(s, 0)));
    CHECK(p_eq(s, psi_plus(ws, upside(ws.games, q2)), p_int(s, 2)));
    CHECK(p_eq(s, psi(ws, upside(ws.games, q2)), p_int(s, 2)));
    CHECK(p_eq(s, psi(ws, downside(ws.games, q2)), p_int(s, 0)));
    for (std::int64_t n = -3; n <= 3; ++n) {
        CHECK(psi_plus(ws, ws.games.leaf(n)) == p_int(s, n));
        CHECK(psi_minus(ws, ws.games.leaf(n)) == p_int(s, n));
    }
    // the bracket definition picks the largest integer for plus
    CHECK(p_eq(s, psi_plus(ws, parse_game(ws.games, "{-2|2}")), p_int(s, 1)));
    CHECK(p_eq(s, psi_minus(ws, parse_game(ws.games, "{-2|2}")), p_int(s, -1)));
}

TEST_CASE("phi examples") {
    Workspace ws;
    auto& s = ws.partizan;
    GameStore& g = ws.games;
    CHECK(phi0(ws, parse_partizan(s, "{1|3*}")) == g.leaf(2));
    CHECK(phi0(ws, parse_partizan(s, "{1|-3*}")) == parse_game(g, "{0|2||-3|-3}"));
    CHECK(phi1(ws, p_int(s, 0)) == parse_game(g, "{-1|1}"));
    CHECK(phi1(ws, p_star(s)) == parse_game(g, "{0|0}"));
    CHECK(phi0(ws, p_int(s, 5)) == g.leaf(5));
    CHECK(phi1(ws, p_int(s, 5)) == parse_game(g, "{4|6}"));
}

TEST_CASE("upper and lower maps are additive, psi is not") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(51);
    for (int i = 0; i < 500; ++i) {
        GameRef g = random_game(ws.games, rng, {2, -3, 3, 2, 0.3});
        GameRef h = random_game(ws.games, rng, {2, -3, 3, 2, 0.3});
        GameRef gh = sum(ws.games, g, h);
        CHECK(p_eq(s, psi_plus(ws, gh), p_sum(s, psi_plus(ws, g), psi_plus(ws, h))));
        CHECK(p_eq(s, psi_minus(ws, gh), p_sum(s, psi_minus(ws, g), psi_minus(ws, h))));
    }
}

TEST_CASE("psi sign tracks outcomes") {
    Workspace ws;
    auto& s = ws.partizan;
    PartizanRef zero = p_int(s, 0);
    Rng rng(52);
    for (int i = 0; i < 500; ++i) {
        GameRef g = random_game(ws.games, rng, {3, -3, 3, 2, 0.3});
        Outcome o = ws.games.outcome(g);
        PartizanRef p = psi(ws, g);
        if (o.parity == Parity::Even) {
            CHECK(p_leq(s, zero, p) == (o.right >= 0));
            CHECK(p_leq(s, p, zero) == (o.left <= 0));
        } else {
            CHECK(p_lf(s, zero, p) == (o.left >= 0));
            CHECK(p_lf(s, p, zero) == (o.right <= 0));
        }
    }
}

TEST_CASE("on J the three maps agree and integers bound psi by outcomes") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(53);
    for (int i = 0; i < 500; ++i) {
        Parity par = coin(rng) ? Parity::Odd : Parity::Even;
        GameRef g = random_j(ws, rng, par);
        REQUIRE(in_j(ws.games, g));
        PartizanRef p = psi(ws, g);
        CHECK(p_eq(s, p, psi_plus(ws, g)));
        CHECK(p_eq(s, p, psi_minus(ws, g)));
        Outcome o = ws.games.outcome(g);
        for (std::int64_t n = -5; n <= 5; ++n) {
            PartizanRef pn = p_int(s, n);
            if (par == Parity::Even) {
                CHECK(p_leq(s, p, pn) == (n >= o.left));
                CHECK(p_leq(s, pn, p) == (n <= o.right));
            } else {
                CHECK(p_lf(s, p, pn) == (n >= o.right));
                CHECK(p_lf(s, pn, p) == (n <= o.left));
            }
        }
    }
}

TEST_CASE("on J the order matches the partizan order") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(54);
    GameRef odd_zero = parse_game(ws.games, "{-1|1}");
    for (int i = 0; i < 500; ++i) {
        Parity par = coin(rng) ? Parity::Odd : Parity::Even;
        GameRef g = random_j(ws, rng, par);
        GameRef h = random_j(ws, rng, par);
        PartizanRef pg = psi(ws, g), ph = psi(ws, h);
        CHECK(ge(ws.games, g, h) == p_leq(s, ph, pg));
        CHECK(ge(ws.games, h, g) == p_leq(s, pg, ph));
        if (p_eq(s, pg, p_int(s, 0)))
            CHECK(equivalent(ws.games, g, par == Parity::Even ? ws.games.leaf(0) : odd_zero));
    }
    CHECK(equivalent(ws.games, parse_game(ws.games, "{{0|0}|{0|0}}"), ws.games.leaf(0)));
}

TEST_CASE("upper map is psi of the upside on K") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(55);
    int tested = 0;
    for (int i = 0; tested < 500 && i < 5000; ++i) {
        GameRef g = random_game(ws.games, rng, {3, -2, 2, 2, 0.3});
        if (!in_k(ws.games, g)) continue;
        ++tested;
        CHECK(p_eq(s, psi_plus(ws, g), psi(ws, upside(ws.games, g))));
        CHECK(p_eq(s, psi_minus(ws, g), psi(ws, downside(ws.games, g))));
    }
    CHECK(tested == 500);
}

TEST_CASE("phi then psi is the identity, and phi preserves order") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(56);
    for (int i = 0; i < 1000; ++i) {
        PartizanRef p = random_partizan(s, rng, 4);
        for (Parity par : {Parity::Even, Parity::Odd}) {
            GameRef g = phi(ws, p, par);
            CHECK(ws.games.outcome(g).parity == par);
            CHECK(in_j(ws.games, g));
            CHECK(p_eq(s, psi(ws, g), p));
        }
    }
    for (int i = 0; i < 500; ++i) {
        PartizanRef p = random_partizan(s, rng, 3);
        PartizanRef q = random_partizan(s, rng, 3);
        Parity par = coin(rng) ? Parity::Odd : Parity::Even;
        GameRef a = phi(ws, p, par), b = phi(ws, q, par);
        CHECK(ge(ws.games, a, b) == p_leq(s, q, p));
        // equal values give equivalent images
        GameRef c = phi(ws, p_canonical(s, p), par);
        CHECK(equivalent(ws.games, a, c));
    }
}

TEST_CASE("heating by one overheats psi") {
    Workspace ws;
    auto& s = ws.partizan;
    PartizanRef one_star = parse_partizan(s, "1*");
    Rng rng(57);
    for (int i = 0; i < 500; ++i) {
        Parity par = coin(rng) ? Parity::Odd : Parity::Even;
        GameRef g = random_j(ws, rng, par);
        PartizanRef lhs = psi(ws, heat(ws.games, g, 1));
        PartizanRef rhs = overheat(s, psi(ws, g), one_star);
        if (par == Parity::Odd) rhs = p_sum(s, p_star(s), rhs);
        CHECK(p_eq(s, lhs, rhs));
    }
}

TEST_CASE("boolean-valued games default to the lower map") {
    Workspace ws;
    auto& s = ws.partizan;
    Rng rng(58);
    for (int i = 0; i < 500; ++i) {
        GameRef g = random_game(ws.games, rng, {3, 0, 1, 2, 0.3});
        CHECK(p_eq(s, psi(ws, g), psi_minus(ws, g)));
    }
    GameRef q1 = q_gadget(ws.games, 1);
    CHECK(p_eq(s, psi(ws, q1), psi_minus(ws, q1)));
    CHECK_FALSE(p_eq(s, psi_plus(ws, q1), psi_minus(ws, q1)));
    CHECK(p_gt(s, psi_plus(ws, q1), psi_minus(ws, q1)));
}

}  // TEST_SUITE

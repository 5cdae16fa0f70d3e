#include <doctest.h>

#include "../support.hpp"
#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/error.hpp"
#include "wts/notation.hpp"

using namespace wts;
using namespace wts::test;

namespace {

std::size_t syntax_position(GameStore& s, const std::string& text) {
    try {
        parse_game(s, text);
    } catch (const SyntaxError& e) {
        return e.position();
    }
    FAIL("no SyntaxError for " << text);
    return 0;
}

}  // namespace

TEST_SUITE("notation") {

TEST_CASE("parse: bar precedence and the worked game") {
    GameStore s;
    GameRef l = s.make_game({s.leaf(0)}, {s.leaf(1)});
    GameRef r = s.make_game({s.leaf(2)}, {s.leaf(3)});
    CHECK(parse_game(s, "{0|1||2|3}") == s.make_game({l}, {r}));
    CHECK(parse_game(s, "{{0|1}|{2|3}}") == s.make_game({l}, {r}));
    GameRef inner = s.make_game({s.make_game({s.leaf(1)}, {s.leaf(1)})}, {s.make_game({s.leaf(2)}, {s.leaf(2)})});
    GameRef worked = s.make_game({s.leaf(2), s.leaf(3)}, {inner});
    CHECK(parse_game(s, "{2,3|{1|1||2|2}}") == worked);
    CHECK(parse_game(s, "{2,3|{{1|1}|{2|2}}}") == worked);
    CHECK(parse_game(s, "  { 2 , 3 | { 1|1 || 2|2 } }  ") == worked);
    CHECK(parse_game(s, "5") == s.leaf(5));
    CHECK(parse_game(s, "-17") == s.leaf(-17));
    CHECK(parse_game(s, "{0|0||1|1}") == q_gadget(s, 1));
    CHECK(parse_game(s, "{0|0||1|1|||2|2||3|3}") == s.make_game({q_gadget(s, 1)}, {parse_game(s, "{{2|2}|{3|3}}")}));
}

TEST_CASE("parse errors carry positions") {
    GameStore s;
    CHECK(syntax_position(s, "") == 0);
    CHECK(syntax_position(s, "{1|2") == 0);
    CHECK(syntax_position(s, "{1|2}x") == 5);
    CHECK(syntax_position(s, "{1 2|3}") == 3);
    CHECK(syntax_position(s, "{1|2|3}") == 2);
    CHECK(syntax_position(s, "{1;2}") == 2);
    // range and construction errors come through with their own codes
    auto code_of = [&](const char* text) {
        try {
            parse_game(s, text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of("{|1}") == ErrorCode::EmptyOptionSet);
    CHECK(code_of("99999999999999999999") == ErrorCode::Overflow);
    try {
        parse_game(s, "{0,{0|0}|1}");
        FAIL("expected MixedParity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MixedParity);
    }
}

TEST_CASE("print examples") {
    GameStore s;
    CHECK(format_game(s, s.leaf(-3)) == "-3");
    CHECK(format_game(s, q_gadget(s, 1)) == "{0|0||1|1}");
    CHECK(format_game(s, q_gadget(s, 1), Style::Nested) == "{{0|0}|{1|1}}");
    CHECK(format_game(s, parse_game(s, "{2,3|{{1|1}|{2|2}}}")) == "{2,3|||1|1||2|2}");
}

TEST_CASE("round trip on random games") {
    GameStore s;
    Rng rng(91);
    for (int i = 0; i < 10000; ++i) {
        GameShape shape{static_cast<int>(uniform(rng, 0, 5)), -20, 20, static_cast<int>(uniform(rng, 1, 3)), 0.3};
        GameRef g = random_game(s, rng, shape);
        CHECK(parse_game(s, format_game(s, g)) == g);
        CHECK(parse_game(s, format_game(s, g, Style::Nested)) == g);
    }
}

TEST_CASE("deep nesting falls back to braces") {
    GameStore s;
    GameRef g = s.leaf(0);
    for (int d = 0; d < 7; ++d) g = s.make_game({g}, {g});
    std::string text = format_game(s, g);
    CHECK(text.find(std::string(kMaxBars + 1, '|')) == std::string::npos);
    CHECK(parse_game(s, text) == g);
}

TEST_CASE("json round trip") {
    GameStore s;
    CHECK(game_to_json(s, s.leaf(4)) == nlohmann::json{{"score", 4}});
    Rng rng(92);
    for (int i = 0; i < 1000; ++i) {
        GameRef g = random_game(s, rng, {});
        auto j = game_to_json(s, g);
        CHECK(game_from_json(s, nlohmann::json::parse(j.dump())) == g);
    }
    CHECK_THROWS_AS(game_from_json(s, nlohmann::json::array()), Error);
    CHECK_THROWS_AS(game_from_json(s, nlohmann::json{{"score", 1.5}}), Error);
    CHECK_THROWS_AS(game_from_json(s, nlohmann::json{{"left", nlohmann::json::array()}}), Error);
}

TEST_CASE("combiner json round trip") {
    Combiner f({{0, 1}, {0, 1, 2}}, [](std::span<const std::int64_t> a) { return std::max(a[0], a[1]); });
    Combiner g = combiner_from_json(nlohmann::json::parse(combiner_to_json(f).dump()));
    CHECK(g.domains() == f.domains());
    CHECK(g.entries() == f.entries());
    CHECK_THROWS_AS(combiner_from_json(nlohmann::json{{"domains", 3}}), Error);
}

TEST_CASE("partizan notation") {
    PartizanStore s;
    CHECK(parse_partizan(s, "*") == p_star(s));
    CHECK(parse_partizan(s, "0") == p_int(s, 0));
    CHECK(parse_partizan(s, "{|}") == p_int(s, 0));
    CHECK(parse_partizan(s, "{0|}") == p_int(s, 1));
    CHECK(p_eq(s, parse_partizan(s, "3/8"), p_number(s, Dyadic(3, 3))));
    CHECK(p_eq(s, parse_partizan(s, "1/2*"), p_sum(s, p_number(s, Dyadic(1, 1)), p_star(s))));
    CHECK(parse_partizan(s, "1/2+*") == parse_partizan(s, "1/2*"));
    CHECK(p_eq(s, parse_partizan(s, "-1/2*"), p_sum(s, p_number(s, Dyadic(-1, 1)), p_star(s))));
    CHECK(p_eq(s, parse_partizan(s, "{1|3*}"), s.make({p_int(s, 1)}, {parse_partizan(s, "3*")})));
    CHECK(format_partizan(s, p_number(s, Dyadic(3, 3))) == "3/8");
    CHECK(format_partizan(s, parse_partizan(s, "1/2*")) == "1/2*");
    CHECK(format_partizan(s, p_star(s)) == "*");
    CHECK(format_partizan(s, p_int(s, -2)) == "-2");
    CHECK_THROWS_AS(parse_partizan(s, "1/3"), SyntaxError);
    Rng rng(93);
    for (int i = 0; i < 1000; ++i) {
        PartizanRef g = random_partizan(s, rng, 3);
        CHECK(p_eq(s, parse_partizan(s, format_partizan(s, g)), g));
    }
}

TEST_CASE("dyadic arithmetic") {
    CHECK(Dyadic(2, 2) == Dyadic(1, 1));
    CHECK((Dyadic(1, 1) + Dyadic(1, 2)).str() == "3/4");
    CHECK((Dyadic(1, 2) - Dyadic(1, 1)).str() == "-1/4");
    CHECK(Dyadic(-3, 1).floor() == -2);
    CHECK(Dyadic(-3, 1).ceil() == -1);
    CHECK(Dyadic::parse("5/8") == Dyadic(5, 3));
    CHECK_THROWS_AS(Dyadic::parse("5/6"), SyntaxError);
    CHECK(simplest_between(Dyadic(0), Dyadic(1)) == Dyadic(1, 1));
    CHECK(simplest_between(Dyadic(1, 1), Dyadic(1)) == Dyadic(3, 2));
    CHECK(simplest_between(std::nullopt, Dyadic(-3, 1)) == Dyadic(-2));
    CHECK(simplest_between(Dyadic(-1), Dyadic(5)) == Dyadic(0));
    CHECK(simplest_between(Dyadic(2), std::nullopt) == Dyadic(3));
}

}  // TEST_SUITE

#include "wts/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <unordered_map>

#include "wts/error.hpp"

namespace wts {

namespace {

enum class Tok { LBrace, RBrace, Comma, Bars, Atom };

struct Token {
    Tok kind;
    std::size_t pos;
    int bars = 0;
    std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '{') {
            out.push_back({Tok::LBrace, i});
            ++i;
        } else if (c == '}') {
            out.push_back({Tok::RBrace, i});
            ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, i});
            ++i;
        } else if (c == '|') {
            Token t{Tok::Bars, i, 0};
            while (i < text.size() && (text[i] == '|' || std::isspace(static_cast<unsigned char>(text[i])))) {
                if (text[i] == '|') ++t.bars;
                ++i;
            }
            out.push_back(t);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '*' || c == '/' || c == '+') {
            Token t{Tok::Atom, i};
            while (i < text.size()) {
                char d = text[i];
                if (!(std::isdigit(static_cast<unsigned char>(d)) || d == '-' || d == '*' || d == '/' || d == '+'))
                    break;
                t.text.push_back(d);
                ++i;
            }
            out.push_back(std::move(t));
        } else {
            throw SyntaxError(i, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

// Parse tree shared by both game kinds.
struct Syntax {
    bool atom = false;
    std::string text;
    std::size_t pos = 0;
    std::vector<Syntax> left;
    std::vector<Syntax> right;
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::size_t end) : toks_(std::move(toks)), end_(end) {}

    Syntax parse_all() {
        if (toks_.empty()) throw SyntaxError(0, "empty input");
        std::size_t i = 0;
        Syntax s = game(i, toks_.size());
        if (i != toks_.size()) throw SyntaxError(toks_[i].pos, "trailing input");
        return s;
    }

private:
    std::size_t pos_of(std::size_t i) const { return i < toks_.size() ? toks_[i].pos : end_; }

    std::size_t matching(std::size_t open, std::size_t limit) const {
        int depth = 0;
        for (std::size_t i = open; i < limit; ++i) {
            if (toks_[i].kind == Tok::LBrace) ++depth;
            if (toks_[i].kind == Tok::RBrace && --depth == 0) return i;
        }
        throw SyntaxError(toks_[open].pos, "unmatched '{'");
    }

    Syntax game(std::size_t& i, std::size_t limit) {
        if (i >= limit) throw SyntaxError(pos_of(i), "expected a game");
        const Token& t = toks_[i];
        if (t.kind == Tok::Atom) {
            ++i;
            return Syntax{true, t.text, t.pos, {}, {}};
        }
        if (t.kind != Tok::LBrace) throw SyntaxError(t.pos, "expected a game");
        std::size_t close = matching(i, limit);
        Syntax s = alternation(i + 1, close);
        s.pos = t.pos;
        i = close + 1;
        return s;
    }

    Syntax alternation(std::size_t a, std::size_t b) {
        int depth = 0, top = 0, count = 0;
        std::size_t split = b;
        for (std::size_t i = a; i < b; ++i) {
            const Token& t = toks_[i];
            if (t.kind == Tok::LBrace) ++depth;
            if (t.kind == Tok::RBrace) --depth;
            if (t.kind == Tok::Bars && depth == 0) {
                if (t.bars > top) {
                    top = t.bars;
                    count = 1;
                    split = i;
                } else if (t.bars == top) {
                    ++count;
                }
            }
        }
        if (count == 0) throw SyntaxError(pos_of(a), "expected '|'");
        if (count > 1)
            throw SyntaxError(toks_[split].pos, "ambiguous: repeated bar of multiplicity " + std::to_string(top));
        Syntax s;
        s.left = side(a, split);
        s.right = side(split + 1, b);
        return s;
    }

    std::vector<Syntax> side(std::size_t a, std::size_t b) {
        std::vector<Syntax> out;
        if (a == b) return out;
        int depth = 0;
        for (std::size_t i = a; i < b; ++i) {
            if (toks_[i].kind == Tok::LBrace) ++depth;
            if (toks_[i].kind == Tok::RBrace) --depth;
            if (toks_[i].kind == Tok::Bars && depth == 0) {
                Syntax s = alternation(a, b);
                s.pos = toks_[a].pos;
                out.push_back(std::move(s));
                return out;
            }
        }
        std::size_t i = a;
        while (true) {
            out.push_back(game(i, b));
            if (i == b) break;
            if (toks_[i].kind != Tok::Comma) throw SyntaxError(toks_[i].pos, "expected ',' or '|'");
            ++i;
        }
        return out;
    }

    std::vector<Token> toks_;
    std::size_t end_;
};

Syntax parse_syntax(std::string_view text) { return Parser(tokenize(text), text.size()).parse_all(); }

std::int64_t parse_int(const std::string& s, std::size_t pos) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw Error(ErrorCode::Overflow, "integer literal " + s);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw SyntaxError(pos, "bad integer '" + s + "'");
    return v;
}

GameRef build_game(GameStore& store, const Syntax& s) {
    if (s.atom) return store.leaf(parse_int(s.text, s.pos));
    std::vector<GameRef> left, right;
    for (const auto& o : s.left) left.push_back(build_game(store, o));
    for (const auto& o : s.right) right.push_back(build_game(store, o));
    return store.make_game(std::move(left), std::move(right));
}

PartizanRef build_partizan(PartizanStore& store, const Syntax& s) {
    if (s.atom) {
        std::string text = s.text;
        bool starred = !text.empty() && text.back() == '*';
        if (starred) text.pop_back();
        if (!text.empty() && text.back() == '+') text.pop_back();
        Dyadic x = text.empty() ? Dyadic(0) : Dyadic::parse(text);
        PartizanRef v = p_number(store, x);
        if (starred) v = p_canonical(store, p_sum(store, v, p_star(store)));
        return v;
    }
    std::vector<PartizanRef> left, right;
    for (const auto& o : s.left) left.push_back(build_partizan(store, o));
    for (const auto& o : s.right) right.push_back(build_partizan(store, o));
    return store.make(std::move(left), std::move(right));
}

class GamePrinter {
public:
    GamePrinter(const GameStore& store, Style style) : store_(store), style_(style) {}

    std::string braced(GameRef g) {
        const GameNode& n = store_.node(g);
        if (n.leaf) return std::to_string(n.score);
        auto it = braced_.find(g);
        if (it != braced_.end()) return it->second;
        std::string out = "{" + body(g).first + "}";
        braced_.emplace(g, out);
        return out;
    }

    // Options in print order: leaves by score, then compound games by text.
    std::vector<GameRef> ordered(const std::vector<GameRef>& opts) {
        std::vector<std::pair<std::string, GameRef>> keyed;
        for (GameRef o : opts) keyed.emplace_back(nested(o), o);
        std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
            bool la = store_.is_leaf(a.second), lb = store_.is_leaf(b.second);
            if (la != lb) return la;
            if (la) return store_.score(a.second) < store_.score(b.second);
            return a.first < b.first;
        });
        std::vector<GameRef> out;
        for (auto& [_, o] : keyed) out.push_back(o);
        return out;
    }

private:
    std::string nested(GameRef g) {
        const GameNode& n = store_.node(g);
        if (n.leaf) return std::to_string(n.score);
        auto it = nested_.find(g);
        if (it != nested_.end()) return it->second;
        std::string out = "{";
        bool first = true;
        for (GameRef o : ordered(n.left)) {
            out += (first ? "" : ",") + nested(o);
            first = false;
        }
        out += "|";
        first = true;
        for (GameRef o : ordered(n.right)) {
            out += (first ? "" : ",") + nested(o);
            first = false;
        }
        out += "}";
        nested_.emplace(g, out);
        return out;
    }

    // Text without outer braces and the bar multiplicity used at top level.
    std::pair<std::string, int> body(GameRef g) {
        if (style_ == Style::Nested) return {nested(g).substr(1, nested(g).size() - 2), 1};
        const GameNode& n = store_.node(g);
        int inner = 0;
        auto side = [&](const std::vector<GameRef>& opts) {
            if (opts.size() == 1 && !store_.is_leaf(opts[0])) {
                auto [text, k] = body(opts[0]);
                if (k + 1 <= kMaxBars) {
                    inner = std::max(inner, k);
                    return text;
                }
            }
            std::string out;
            bool first = true;
            for (GameRef o : ordered(opts)) {
                out += (first ? "" : ",") + braced(o);
                first = false;
            }
            return out;
        };
        std::string l = side(n.left);
        std::string r = side(n.right);
        int k = inner + 1;
        return {l + std::string(static_cast<std::size_t>(k), '|') + r, k};
    }

    const GameStore& store_;
    Style style_;
    std::unordered_map<GameRef, std::string> braced_;
    std::unordered_map<GameRef, std::string> nested_;
};

std::string partizan_text(PartizanStore& store, PartizanRef g) {
    if (auto x = p_as_number(store, g)) return x->str();
    PartizanRef shifted = p_sum(store, g, p_star(store));
    if (auto x = p_as_number(store, shifted)) return *x == Dyadic(0) ? "*" : x->str() + "*";
    std::vector<std::string> left, right;
    for (PartizanRef o : store.left_options(g)) left.push_back(partizan_text(store, o));
    for (PartizanRef o : store.right_options(g)) right.push_back(partizan_text(store, o));
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::string out = "{";
    for (std::size_t i = 0; i < left.size(); ++i) out += (i ? "," : "") + left[i];
    out += "|";
    for (std::size_t i = 0; i < right.size(); ++i) out += (i ? "," : "") + right[i];
    return out + "}";
}

}  // namespace

GameRef parse_game(GameStore& store, std::string_view text) {
    return build_game(store, parse_syntax(text));
}

PartizanRef parse_partizan(PartizanStore& store, std::string_view text) {
    return build_partizan(store, parse_syntax(text));
}

std::string format_game(const GameStore& store, GameRef g, Style style) {
    return GamePrinter(store, style).braced(g);
}

std::string format_partizan(PartizanStore& store, PartizanRef g) { return partizan_text(store, g); }

nlohmann::json game_to_json(const GameStore& store, GameRef g) {
    GamePrinter printer(store, Style::Nested);
    auto rec = [&](auto&& self, GameRef x) -> nlohmann::json {
        const GameNode& n = store.node(x);
        if (n.leaf) return {{"score", n.score}};
        nlohmann::json left = nlohmann::json::array(), right = nlohmann::json::array();
        for (GameRef o : printer.ordered(n.left)) left.push_back(self(self, o));
        for (GameRef o : printer.ordered(n.right)) right.push_back(self(self, o));
        return {{"left", left}, {"right", right}};
    };
    return rec(rec, g);
}

GameRef game_from_json(GameStore& store, const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "game JSON must be an object");
    if (j.contains("score")) {
        if (!j["score"].is_number_integer()) throw Error(ErrorCode::InvalidArgument, "score must be an integer");
        return store.leaf(j["score"].get<std::int64_t>());
    }
    if (!j.contains("left") || !j.contains("right") || !j["left"].is_array() || !j["right"].is_array())
        throw Error(ErrorCode::InvalidArgument, "game JSON needs score or left/right arrays");
    std::vector<GameRef> left, right;
    for (const auto& o : j["left"]) left.push_back(game_from_json(store, o));
    for (const auto& o : j["right"]) right.push_back(game_from_json(store, o));
    return store.make_game(std::move(left), std::move(right));
}

nlohmann::json combiner_to_json(const Combiner& f) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [in, out] : f.entries()) table.push_back({{"in", in}, {"out", out}});
    return {{"domains", f.domains()}, {"table", table}};
}

Combiner combiner_from_json(const nlohmann::json& j) {
    try {
        auto domains = j.at("domains").get<std::vector<std::vector<std::int64_t>>>();
        std::vector<Combiner::Entry> entries;
        for (const auto& e : j.at("table"))
            entries.emplace_back(e.at("in").get<std::vector<std::int64_t>>(), e.at("out").get<std::int64_t>());
        return Combiner::from_table(std::move(domains), entries);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("combiner JSON: ") + e.what());
    }
}

}  // namespace wts

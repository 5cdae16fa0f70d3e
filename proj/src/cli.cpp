#include "wts/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "wts/boolean.hpp"
#include "wts/canonical.hpp"
#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/error.hpp"
#include "wts/examples.hpp"
#include "wts/maps.hpp"
#include "wts/notation.hpp"
#include "wts/order.hpp"

namespace wts {

namespace {

using nlohmann::json;

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

json class_json(PartizanStore& ps, const BoolClass& c) {
    Outcome oc = outcome_from_class(ps, c);
    return {{"up", octet_name(c.up)},
            {"down", octet_name(c.down)},
            {"parity", parity_name(c.parity)},
            {"left", oc.left},
            {"right", oc.right}};
}

std::string class_text(const json& j) {
    return "(" + j["up"].get<std::string>() + ", " + j["down"].get<std::string>() + ", " +
           j["parity"].get<std::string>() + ") l=" + std::to_string(j["left"].get<std::int64_t>()) +
           " r=" + std::to_string(j["right"].get<std::int64_t>());
}

json game_json(const GameStore& store, GameRef g) {
    return {{"game", format_game(store, g)}, {"tree", game_to_json(store, g)}};
}

void check_golden(const std::string& path, const json& actual) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read golden file " + path);
    json expected;
    try {
        in >> expected;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, "golden file is not JSON: " + std::string(e.what()));
    }
    if (expected != actual) throw Error(ErrorCode::GoldenMismatch, "output differs from golden file " + path);
}

std::string relation_symbol(bool ge, bool le, const char* suffix) {
    if (ge && le) return std::string("≈") + suffix;
    if (ge) return std::string("≳") + suffix;
    if (le) return std::string("≲") + suffix;
    return "";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Well-tempered scoring games: evaluation, comparison and classification", "wts"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string a, b, golden;
    std::int64_t temperature = 0;
    bool via_psi = false, check_distinct = false;
    int inputs = 0;

    auto* eval = app.add_subcommand("eval", "Outcomes, gaps, parity and class membership");
    eval->add_option("game", a)->required();
    auto* cmp = app.add_subcommand("compare", "Order relations between two games");
    cmp->add_option("lhs", a)->required();
    cmp->add_option("rhs", b)->required();
    auto* sum_cmd = app.add_subcommand("sum", "Disjunctive sum");
    sum_cmd->add_option("lhs", a)->required();
    sum_cmd->add_option("rhs", b)->required();
    auto* neg_cmd = app.add_subcommand("neg", "Negative");
    neg_cmd->add_option("game", a)->required();
    auto* heat_cmd = app.add_subcommand("heat", "Heat by an integer");
    heat_cmd->add_option("-t", temperature, "Temperature")->required();
    heat_cmd->add_option("game", a)->required();
    auto* sides_cmd = app.add_subcommand("sides", "Upside and downside");
    sides_cmd->add_option("game", a)->required();
    auto* canon_cmd = app.add_subcommand("canonical", "Canonical form of an invertible game");
    canon_cmd->add_option("game", a)->required();
    canon_cmd->add_flag("--via-psi", via_psi, "Compute through the normal-play canonical form");
    auto* psi_cmd = app.add_subcommand("psi", "Map to a normal-play game");
    psi_cmd->add_option("game", a)->required();
    auto* psi_plus_cmd = app.add_subcommand("psi+", "Map using upper integer brackets");
    psi_plus_cmd->add_option("game", a)->required();
    auto* psi_minus_cmd = app.add_subcommand("psi-", "Map using lower integer brackets");
    psi_minus_cmd->add_option("game", a)->required();
    auto* phi0_cmd = app.add_subcommand("phi0", "Even-tempered game from a normal-play game");
    phi0_cmd->add_option("game", a)->required();
    auto* phi1_cmd = app.add_subcommand("phi1", "Odd-tempered game from a normal-play game");
    phi1_cmd->add_option("game", a)->required();

    auto* bool_cmd = app.add_subcommand("bool", "{0,1}-valued games");
    bool_cmd->require_subcommand(1);
    auto* classify = bool_cmd->add_subcommand("classify", "u-values and parity");
    classify->add_option("game", a)->required();
    auto* enumerate = bool_cmd->add_subcommand("enumerate", "All 70 classes with representatives");
    enumerate->add_option("--golden", golden, "Compare JSON output with this file");
    enumerate->add_flag("--check-distinct", check_distinct, "Verify representatives are pairwise distinct");
    auto* table = bool_cmd->add_subcommand("table", "cup or cap table on the octet");
    table->add_option("op", a)->required()->check(CLI::IsMember({"cup", "cap"}));
    table->add_option("--golden", golden, "Compare JSON output with this file");

    auto* shadow = app.add_subcommand("shadow", "Rational knot shadow game");
    shadow->add_option("twists", a, "Comma-separated crossing counts")->required();
    auto* input_cmd = app.add_subcommand("inputgame", "Input-setting game of a truth table");
    input_cmd->add_option("n", inputs)->required();
    input_cmd->add_option("bits", b, "2^n characters, input 1 least significant")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Workspace ws;
    GameStore& gs = ws.games;
    PartizanStore& ps = ws.partizan;
    json result;
    std::string text;
    try {
        if (*eval) {
            GameRef g = parse_game(gs, a);
            Outcome oc = gs.outcome(g);
            Gaps gaps = gs.gaps(g);
            result = game_json(gs, g);
            result.update({{"left", oc.left},
                           {"right", oc.right},
                           {"left_final", oc.left_final()},
                           {"right_final", oc.right_final()},
                           {"parity", parity_name(oc.parity)},
                           {"gap0", gaps.even},
                           {"gap1", gaps.odd ? json(*gaps.odd) : json(nullptr)},
                           {"in_I", in_invertible_class(gs, g)},
                           {"in_J", in_j(gs, g)},
                           {"in_K", in_k(gs, g)},
                           {"invertible", invertible(gs, g)}});
            auto yes = [&](const char* k) { return result[k].get<bool>() ? "true" : "false"; };
            text = "l=" + std::to_string(oc.left) + " r=" + std::to_string(oc.right) +
                   " parity=" + parity_name(oc.parity) + "\nlf=" + std::to_string(oc.left_final()) +
                   " rf=" + std::to_string(oc.right_final()) + "\ngap0=" + std::to_string(gaps.even) +
                   " gap1=" + (gaps.odd ? std::to_string(*gaps.odd) : std::string("-inf")) +
                   "\nin_I=" + yes("in_I") + " in_J=" + yes("in_J") + " in_K=" + yes("in_K") +
                   " invertible=" + yes("invertible") + "\n";
        } else if (*cmp) {
            GameRef g = parse_game(gs, a);
            GameRef h = parse_game(gs, b);
            bool ge_full = ge(gs, g, h), le_full = ge(gs, h, g);
            bool ge_p = ge_plus(gs, g, h), le_p = ge_plus(gs, h, g);
            bool ge_m = ge_minus(gs, g, h), le_m = ge_minus(gs, h, g);
            result = {{"ge", ge_full}, {"le", le_full}, {"equivalent", ge_full && le_full},
                      {"ge_plus", ge_p}, {"le_plus", le_p}, {"equivalent_plus", ge_p && le_p},
                      {"ge_minus", ge_m}, {"le_minus", le_m}, {"equivalent_minus", ge_m && le_m}};
            std::vector<std::string> rel;
            for (auto s : {relation_symbol(ge_full, le_full, ""), relation_symbol(ge_p, le_p, "+"),
                           relation_symbol(ge_m, le_m, "−")})
                if (!s.empty()) rel.push_back(s);
            text = "relations:";
            if (rel.empty()) text += " incomparable";
            for (const auto& s : rel) text += " " + s;
            text += "\n";
        } else if (*sum_cmd || *neg_cmd || *heat_cmd || *canon_cmd || *phi0_cmd || *phi1_cmd) {
            GameRef r;
            if (*sum_cmd) {
                r = sum(gs, parse_game(gs, a), parse_game(gs, b));
            } else if (*neg_cmd) {
                r = negate(gs, parse_game(gs, a));
            } else if (*heat_cmd) {
                r = heat(gs, parse_game(gs, a), temperature);
            } else if (*canon_cmd) {
                GameRef g = parse_game(gs, a);
                r = via_psi ? canonical_form_via_psi(ws, g) : canonical_form(gs, g);
            } else {
                r = phi(ws, parse_partizan(ps, a), *phi0_cmd ? Parity::Even : Parity::Odd);
            }
            result = game_json(gs, r);
            text = format_game(gs, r) + "\n";
        } else if (*sides_cmd) {
            GameRef g = parse_game(gs, a);
            GameRef up = upside(gs, g), down = downside(gs, g);
            result = {{"up", game_json(gs, up)}, {"down", game_json(gs, down)}};
            text = "up: " + format_game(gs, up) + "\ndown: " + format_game(gs, down) + "\n";
        } else if (*psi_cmd || *psi_plus_cmd || *psi_minus_cmd) {
            GameRef g = parse_game(gs, a);
            PartizanRef p = *psi_cmd ? psi(ws, g) : *psi_plus_cmd ? psi_plus(ws, g) : psi_minus(ws, g);
            std::string value = format_partizan(ps, p_canonical(ps, p));
            result = {{"value", value}};
            text = value + "\n";
        } else if (*classify) {
            GameRef g = parse_game(gs, a);
            result = class_json(ps, u_values(ws, g));
            text = class_text(result) + "\n";
        } else if (*enumerate) {
            auto entries = enumerate_classes(ws);
            result = json::array();
            for (const auto& e : entries) {
                json row = class_json(ps, e.cls);
                // full representatives run to megabytes of text; print the canonical sides
                row["representative"] = format_game(gs, canonical_form(gs, upside(gs, e.game))) + " & " +
                                        format_game(gs, canonical_form(gs, downside(gs, e.game)));
                row["subgames"] = subgames(gs, e.game).size();
                result.push_back(row);
                text += class_text(row) + " " + row["representative"].get<std::string>() + "\n";
            }
            if (check_distinct) {
                unsigned threads = std::max(1u, std::thread::hardware_concurrency());
                std::size_t same = count_equivalent_pairs(gs, entries, threads);
                text += "equivalent pairs: " + std::to_string(same) + "\n";
                if (same != 0)
                    throw Error(ErrorCode::ClassificationFailure, "representatives are not pairwise distinct");
            }
            if (!golden.empty()) check_golden(golden, result);
        } else if (*table) {
            auto t = a == "cup" ? cup_table(ps) : cap_table(ps);
            json names = json::array(), rows = json::array();
            for (int i = 0; i < kOctetSize; ++i) names.push_back(octet_name(i));
            text = a;
            for (int j = 0; j < kOctetSize; ++j) text += "\t" + std::string(octet_name(j));
            text += "\n";
            for (int i = 0; i < kOctetSize; ++i) {
                json row = json::array();
                text += std::string(octet_name(i));
                for (int j = 0; j < kOctetSize; ++j) {
                    row.push_back(octet_name(t[i][j]));
                    text += "\t" + std::string(octet_name(t[i][j]));
                }
                rows.push_back(row);
                text += "\n";
            }
            result = {{"op", a}, {"octet", names}, {"table", rows}};
            if (!golden.empty()) check_golden(golden, result);
        } else if (*shadow) {
            TwistVector tw = parse_twists(a);
            GameRef g = shadow_game_brute(gs, tw);
            json rule = class_json(ps, shadow_value_by_rule(tw));
            json brute = class_json(ps, u_values(ws, g));
            Outcome oc = gs.outcome(g);
            result = {{"rule", rule}, {"brute", brute}, {"agree", rule == brute},
                      {"left", oc.left}, {"right", oc.right}};
            text = "rule=" + class_text(rule) + "\nbrute=" + class_text(brute) +
                   "\nagree=" + (rule == brute ? "true" : "false") + "\n";
        } else if (*input_cmd) {
            GameRef g = input_setting_game(gs, TruthTable::parse(inputs, b));
            Outcome oc = gs.outcome(g);
            json cls = class_json(ps, u_values(ws, g));
            result = game_json(gs, g);
            result.update({{"left", oc.left}, {"right", oc.right}, {"parity", parity_name(oc.parity)},
                           {"class", cls}});
            text = format_game(gs, g) + "\nl=" + std::to_string(oc.left) + " r=" + std::to_string(oc.right) +
                   " parity=" + parity_name(oc.parity) + "\nclass=" + class_text(cls) + "\n";
        }
    } catch (const SyntaxError& e) {
        if (as_json) {
            out << json{{"error", e.name()}, {"message", e.what()}, {"position", e.position()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const Error& e) {
        if (as_json) {
            out << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    }
    if (as_json) {
        out << result.dump(2) << "\n";
    } else {
        out << text;
    }
    return 0;
}

}  // namespace wts

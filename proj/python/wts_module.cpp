#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "wts/boolean.hpp"
#include "wts/canonical.hpp"
#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/error.hpp"
#include "wts/examples.hpp"
#include "wts/maps.hpp"
#include "wts/notation.hpp"
#include "wts/order.hpp"
#include "wts/workspace.hpp"

namespace py = pybind11;
using namespace wts;

namespace {

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

Parity parse_parity(const std::string& s) {
    if (s == "even" || s == "0") return Parity::Even;
    if (s == "odd" || s == "1") return Parity::Odd;
    throw Error(ErrorCode::InvalidArgument, "parity must be 'even' or 'odd'");
}

GameRef checked(Workspace& ws, GameRef g) {
    if (!ws.games.owns(g)) throw Error(ErrorCode::InvalidArgument, "game not owned by this workspace");
    return g;
}

PartizanRef checked(Workspace& ws, PartizanRef p) {
    if (p.id >= ws.partizan.size())
        throw Error(ErrorCode::InvalidArgument, "partizan game not owned by this workspace");
    return p;
}

UValue parse_u(const std::string& s) {
    auto u = octet_index(s);
    if (!u) throw Error(ErrorCode::InvalidArgument, "unknown u-value '" + s + "'");
    return *u;
}

py::tuple class_tuple(const BoolClass& c) {
    return py::make_tuple(std::string(octet_name(c.up)), std::string(octet_name(c.down)),
                          parity_name(c.parity));
}

Style parse_style(const std::string& s) {
    if (s == "bars") return Style::Bars;
    if (s == "nested") return Style::Nested;
    throw Error(ErrorCode::InvalidArgument, "style must be 'bars' or 'nested'");
}

}  // namespace

PYBIND11_MODULE(_wts, m) {
    m.doc() = "Well-tempered scoring games";

    static py::exception<Error> wts_error(m, "WtsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            wts_error(e.what());
        }
    });

    py::class_<GameRef>(m, "Game")
        .def_readonly("id", &GameRef::id)
        .def("__eq__", [](GameRef a, GameRef b) { return a == b; })
        .def("__hash__", [](GameRef a) { return std::hash<GameRef>{}(a); })
        .def("__repr__", [](GameRef a) { return "<Game #" + std::to_string(a.id) + ">"; });

    py::class_<PartizanRef>(m, "Partizan")
        .def_readonly("id", &PartizanRef::id)
        .def("__eq__", [](PartizanRef a, PartizanRef b) { return a == b; })
        .def("__hash__", [](PartizanRef a) { return std::hash<PartizanRef>{}(a); })
        .def("__repr__", [](PartizanRef a) { return "<Partizan #" + std::to_string(a.id) + ">"; });

    py::class_<Workspace, std::unique_ptr<Workspace>>(m, "Workspace")
        .def(py::init<>())
        // construction and text
        .def("parse", [](Workspace& ws, const std::string& text) { return parse_game(ws.games, text); })
        .def("parse_partizan",
             [](Workspace& ws, const std::string& text) { return parse_partizan(ws.partizan, text); })
        .def("format",
             [](Workspace& ws, GameRef g, const std::string& style) {
                 return format_game(ws.games, checked(ws, g), parse_style(style));
             },
             py::arg("g"), py::arg("style") = "bars")
        .def("format_partizan",
             [](Workspace& ws, PartizanRef p) { return format_partizan(ws.partizan, checked(ws, p)); })
        .def("leaf", [](Workspace& ws, std::int64_t n) { return ws.games.leaf(n); })
        .def_property_readonly("game_count", [](Workspace& ws) { return ws.games.size(); })
        .def("game",
             [](Workspace& ws, std::vector<GameRef> left, std::vector<GameRef> right) {
                 for (auto g : left) checked(ws, g);
                 for (auto g : right) checked(ws, g);
                 return ws.games.make_game(std::move(left), std::move(right));
             })
        .def("to_json",
             [](Workspace& ws, GameRef g) { return game_to_json(ws.games, checked(ws, g)).dump(); })
        .def("from_json",
             [](Workspace& ws, const std::string& text) {
                 return game_from_json(ws.games, nlohmann::json::parse(text));
             })
        // inspection
        .def("outcome",
             [](Workspace& ws, GameRef g) {
                 auto o = ws.games.outcome(checked(ws, g));
                 return py::make_tuple(o.left, o.right, parity_name(o.parity));
             })
        .def("gaps",
             [](Workspace& ws, GameRef g) {
                 auto gp = ws.games.gaps(checked(ws, g));
                 return py::make_tuple(gp.even, gp.odd);
             })
        .def("is_leaf", [](Workspace& ws, GameRef g) { return ws.games.is_leaf(checked(ws, g)); })
        .def("left_options",
             [](Workspace& ws, GameRef g) { return ws.games.left_options(checked(ws, g)); })
        .def("right_options",
             [](Workspace& ws, GameRef g) { return ws.games.right_options(checked(ws, g)); })
        .def("in_I", [](Workspace& ws, GameRef g) { return in_invertible_class(ws.games, checked(ws, g)); })
        .def("in_J", [](Workspace& ws, GameRef g) { return in_j(ws.games, checked(ws, g)); })
        .def("in_K", [](Workspace& ws, GameRef g) { return in_k(ws.games, checked(ws, g)); })
        // arithmetic
        .def("sum", [](Workspace& ws, GameRef a, GameRef b) { return sum(ws.games, checked(ws, a), checked(ws, b)); })
        .def("diff", [](Workspace& ws, GameRef a, GameRef b) { return diff(ws.games, checked(ws, a), checked(ws, b)); })
        .def("neg", [](Workspace& ws, GameRef a) { return negate(ws.games, checked(ws, a)); })
        .def("heat", [](Workspace& ws, GameRef a, std::int64_t t) { return heat(ws.games, checked(ws, a), t); })
        .def("or_", [](Workspace& ws, GameRef a, GameRef b) { return or_op(ws.games, checked(ws, a), checked(ws, b)); })
        .def("and_", [](Workspace& ws, GameRef a, GameRef b) { return and_op(ws.games, checked(ws, a), checked(ws, b)); })
        .def("ampersand",
             [](Workspace& ws, GameRef up, GameRef down) {
                 return ampersand(ws.games, checked(ws, up), checked(ws, down));
             })
        // order
        .def("compare",
             [](Workspace& ws, GameRef a, GameRef b) {
                 return std::string(comparison_name(compare(ws.games, checked(ws, a), checked(ws, b))));
             })
        .def("ge", [](Workspace& ws, GameRef a, GameRef b) { return ge(ws.games, checked(ws, a), checked(ws, b)); })
        .def("ge_plus", [](Workspace& ws, GameRef a, GameRef b) { return ge_plus(ws.games, checked(ws, a), checked(ws, b)); })
        .def("ge_minus", [](Workspace& ws, GameRef a, GameRef b) { return ge_minus(ws.games, checked(ws, a), checked(ws, b)); })
        .def("equivalent",
             [](Workspace& ws, GameRef a, GameRef b) { return equivalent(ws.games, checked(ws, a), checked(ws, b)); })
        .def("invertible", [](Workspace& ws, GameRef a) { return invertible(ws.games, checked(ws, a)); })
        .def("upside", [](Workspace& ws, GameRef a) { return upside(ws.games, checked(ws, a)); })
        .def("downside", [](Workspace& ws, GameRef a) { return downside(ws.games, checked(ws, a)); })
        // canonical forms and maps
        .def("canonical", [](Workspace& ws, GameRef a) { return canonical_form(ws.games, checked(ws, a)); })
        .def("canonical_via_psi", [](Workspace& ws, GameRef a) { return canonical_form_via_psi(ws, checked(ws, a)); })
        .def("is_canonical", [](Workspace& ws, GameRef a) { return is_canonical(ws.games, checked(ws, a)); })
        .def("psi", [](Workspace& ws, GameRef a) { return psi(ws, checked(ws, a)); })
        .def("psi_plus", [](Workspace& ws, GameRef a) { return psi_plus(ws, checked(ws, a)); })
        .def("psi_minus", [](Workspace& ws, GameRef a) { return psi_minus(ws, checked(ws, a)); })
        .def("phi0", [](Workspace& ws, PartizanRef p) { return phi0(ws, checked(ws, p)); })
        .def("phi1", [](Workspace& ws, PartizanRef p) { return phi1(ws, checked(ws, p)); })
        .def("p_equal",
             [](Workspace& ws, PartizanRef a, PartizanRef b) {
                 return p_eq(ws.partizan, checked(ws, a), checked(ws, b));
             })
        // boolean games
        .def("u_values", [](Workspace& ws, GameRef g) { return class_tuple(u_values(ws, checked(ws, g))); })
        .def("representative",
             [](Workspace& ws, const std::string& up, const std::string& down, const std::string& parity) {
                 return representative(ws, BoolClass{parse_u(up), parse_u(down), parse_parity(parity)});
             })
        .def("enumerate_classes",
             [](Workspace& ws) {
                 std::vector<std::tuple<py::tuple, GameRef>> out;
                 for (const auto& e : enumerate_classes(ws)) out.emplace_back(class_tuple(e.cls), e.game);
                 return out;
             })
        .def("cup",
             [](Workspace& ws, const std::string& a, const std::string& b) {
                 return std::string(octet_name(cup(ws.partizan, parse_u(a), parse_u(b))));
             })
        .def("cap",
             [](Workspace& ws, const std::string& a, const std::string& b) {
                 return std::string(octet_name(cap(ws.partizan, parse_u(a), parse_u(b))));
             })
        .def("verify_boolean_claim",
             [](Workspace& ws) {
                 auto r = verify_boolean_claim(ws);
                 return py::make_tuple(r.passed(), r.cases.size());
             })
        // example families
        .def("input_setting_game",
             [](Workspace& ws, int n, const std::string& bits) {
                 return input_setting_game(ws.games, TruthTable::parse(n, bits));
             })
        .def("shadow_game",
             [](Workspace& ws, const std::string& twists) {
                 return shadow_game_brute(ws.games, parse_twists(twists));
             })
        .def("shadow_value_by_rule", [](Workspace&, const std::string& twists) {
            return class_tuple(shadow_value_by_rule(parse_twists(twists)));
        });

    m.def("octet", [] {
        std::vector<std::string> names;
        for (int u = 0; u < kOctetSize; ++u) names.emplace_back(octet_name(u));
        return names;
    });
    m.def("count_classes", [](std::uint64_t size) { return count_classes(size); });
}

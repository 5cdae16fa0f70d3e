#include "wts/boolean.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wts/core.hpp"
#include "wts/disjunctive.hpp"
#include "wts/error.hpp"
#include "wts/maps.hpp"
#include "wts/order.hpp"

namespace wts {

namespace {

constexpr std::array<std::string_view, kOctetSize> kNames = {"0",   "1/4", "3/8", "1/2",
                                                             "1/2*", "5/8", "3/4", "1"};

void check_index(UValue u) {
    if (u < 0 || u >= kOctetSize) throw Error(ErrorCode::InvalidArgument, "octet index out of range");
}

std::optional<UValue> find_in(const std::array<PartizanRef, kOctetSize>& set, PartizanRef canon) {
    for (int i = 0; i < kOctetSize; ++i)
        if (set[i] == canon) return i;
    return std::nullopt;
}

}  // namespace

std::string_view octet_name(UValue u) {
    check_index(u);
    return kNames[u];
}

std::optional<UValue> octet_index(std::string_view name) {
    for (int i = 0; i < kOctetSize; ++i)
        if (kNames[i] == name) return i;
    if (name == "1/2+*") return 4;
    return std::nullopt;
}

std::array<PartizanRef, kOctetSize> octet(PartizanStore& store) {
    PartizanRef half = p_number(store, Dyadic(1, 1));
    return {p_int(store, 0),
            p_number(store, Dyadic(1, 2)),
            p_number(store, Dyadic(3, 3)),
            half,
            p_canonical(store, p_sum(store, half, p_star(store))),
            p_number(store, Dyadic(5, 3)),
            p_number(store, Dyadic(3, 2)),
            p_int(store, 1)};
}

bool octet_leq(PartizanStore& store, UValue a, UValue b) {
    check_index(a);
    check_index(b);
    auto s = octet(store);
    return p_leq(store, s[a], s[b]);
}

std::string to_string(const BoolClass& c) {
    return "(" + std::string(octet_name(c.up)) + ", " + std::string(octet_name(c.down)) + ", " +
           (c.parity == Parity::Even ? "even" : "odd") + ")";
}

std::array<PartizanRef, kOctetSize> boolean_values(PartizanStore& store, Parity parity) {
    auto s = octet(store);
    PartizanRef t = p_number(store, Dyadic(1, 1));
    PartizanRef st = p_star(store);
    std::array<PartizanRef, kOctetSize> out;
    for (int i = 0; i < kOctetSize; ++i) {
        PartizanRef x = overheat(store, s[i], t);
        out[i] = parity == Parity::Even ? x : p_canonical(store, p_sum(store, st, x));
    }
    return out;
}

BoolClass u_values(Workspace& ws, GameRef g) {
    if (!is_s_valued(ws.games, g, {0, 1}))
        throw Error(ErrorCode::NotBooleanValued, "game has leaves outside {0,1}");
    GameRef e = even_projection(ws.games, g);
    auto x0 = boolean_values(ws.partizan, Parity::Even);
    auto side = [&](GameRef s) {
        PartizanRef p = p_canonical(ws.partizan, psi(ws, s));
        auto idx = find_in(x0, p);
        if (!idx) throw Error(ErrorCode::ClassificationFailure, "side value not in the octet image");
        return *idx;
    };
    return {side(upside(ws.games, e)), side(downside(ws.games, e)), ws.games.parity(g)};
}

UValue cup(PartizanStore& store, UValue x, UValue y) {
    check_index(x);
    check_index(y);
    auto s = octet(store);
    PartizanRef total = p_sum(store, s[x], s[y]);
    std::vector<UValue> below;
    for (int z = 0; z < kOctetSize; ++z)
        if (p_leq(store, s[z], total)) below.push_back(z);
    for (UValue z : below)
        if (std::all_of(below.begin(), below.end(), [&](UValue w) { return p_leq(store, s[w], s[z]); }))
            return z;
    throw Error(ErrorCode::NoExtremum, "no greatest octet element below the sum");
}

UValue cap(PartizanStore& store, UValue x, UValue y) {
    check_index(x);
    check_index(y);
    auto s = octet(store);
    PartizanRef floor = p_diff(store, p_sum(store, s[x], s[y]), p_int(store, 1));
    std::vector<UValue> above;
    for (int w = 0; w < kOctetSize; ++w)
        if (p_leq(store, floor, s[w])) above.push_back(w);
    for (UValue w : above)
        if (std::all_of(above.begin(), above.end(), [&](UValue z) { return p_leq(store, s[w], s[z]); }))
            return w;
    throw Error(ErrorCode::NoExtremum, "no least octet element above the sum");
}

std::array<std::array<UValue, kOctetSize>, kOctetSize> cup_table(PartizanStore& store) {
    std::array<std::array<UValue, kOctetSize>, kOctetSize> t{};
    for (int i = 0; i < kOctetSize; ++i)
        for (int j = 0; j < kOctetSize; ++j) t[i][j] = cup(store, i, j);
    return t;
}

std::array<std::array<UValue, kOctetSize>, kOctetSize> cap_table(PartizanStore& store) {
    std::array<std::array<UValue, kOctetSize>, kOctetSize> t{};
    for (int i = 0; i < kOctetSize; ++i)
        for (int j = 0; j < kOctetSize; ++j) t[i][j] = cap(store, i, j);
    return t;
}

Outcome outcome_from_class(PartizanStore& store, const BoolClass& c) {
    constexpr UValue kZero = 0, kHalf = 3, kOne = 7;
    Outcome out;
    out.parity = c.parity;
    if (c.parity == Parity::Even) {
        out.left = c.down == kZero ? 0 : 1;
        out.right = c.up == kOne ? 1 : 0;
    } else {
        out.left = octet_leq(store, c.up, kHalf) ? 0 : 1;
        out.right = octet_leq(store, kHalf, c.down) ? 1 : 0;
    }
    return out;
}

bool is_legal(PartizanStore& store, const BoolClass& c) { return octet_leq(store, c.down, c.up); }

GameRef representative(Workspace& ws, const BoolClass& c) {
    if (!is_legal(ws.partizan, c))
        throw Error(ErrorCode::IllegalClass, to_string(c) + " has upside below downside");
    auto s = octet(ws.partizan);
    PartizanRef t = p_number(ws.partizan, Dyadic(1, 1));
    auto lift = [&](UValue u) { return phi0(ws, overheat(ws.partizan, s[u], t)); };
    GameRef g = ampersand(ws.games, lift(c.up), lift(c.down), std::set<std::int64_t>{0, 1});
    if (c.parity == Parity::Odd) g = sum(ws.games, g, star(ws.games));
    return g;
}

std::vector<ClassEntry> enumerate_classes(Workspace& ws) {
    std::vector<ClassEntry> out;
    for (Parity parity : {Parity::Even, Parity::Odd})
        for (UValue up = 0; up < kOctetSize; ++up)
            for (UValue down = 0; down < kOctetSize; ++down) {
                BoolClass c{up, down, parity};
                if (is_legal(ws.partizan, c)) out.push_back({c, representative(ws, c)});
            }
    return out;
}

std::size_t count_equivalent_pairs(GameStore& store, const std::vector<ClassEntry>& entries,
                                   unsigned threads) {
    std::atomic<std::size_t> found{0};
    std::atomic<std::size_t> next_row{0};
    auto worker = [&] {
        for (std::size_t i = next_row++; i < entries.size(); i = next_row++)
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                if (equivalent(store, entries[i].game, entries[j].game)) ++found;
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < std::max(1u, threads); ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return found;
}

std::size_t ClaimReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const ClaimCase& c) { return c.match.has_value(); }));
}

ClaimReport verify_boolean_claim(Workspace& ws) {
    ClaimReport report;
    std::vector<std::vector<UValue>> antichains;
    for (UValue u = 0; u < kOctetSize; ++u) antichains.push_back({u});
    antichains.push_back({3, 4});
    for (Parity source : {Parity::Even, Parity::Odd}) {
        auto from = boolean_values(ws.partizan, source);
        auto to = boolean_values(ws.partizan, flip(source));
        for (const auto& a : antichains) {
            for (const auto& b : antichains) {
                std::vector<PartizanRef> left, right;
                for (UValue u : a) left.push_back(from[u]);
                for (UValue u : b) right.push_back(from[u]);
                PartizanRef g = p_canonical(ws.partizan, ws.partizan.make(left, right));
                report.cases.push_back({source, a, b, find_in(to, g)});
            }
        }
    }
    return report;
}

std::optional<std::uint64_t> count_classes(std::uint64_t size) {
    switch (size) {
        case 0: return 0;
        case 1: return 2;
        case 2: return 70;
        default: return std::nullopt;
    }
}

}  // namespace wts

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wts/game_store.hpp"
#include "wts/partizan.hpp"
#include "wts/workspace.hpp"

namespace wts {

// Index into the octet 0, 1/4, 3/8, 1/2, 1/2*, 5/8, 3/4, 1 (listed order).
using UValue = int;
inline constexpr int kOctetSize = 8;

std::string_view octet_name(UValue u);
std::optional<UValue> octet_index(std::string_view name);
// Canonical normal-play forms of the octet.
std::array<PartizanRef, kOctetSize> octet(PartizanStore& store);
// Partial order on the octet: total except 1/2 and 1/2* are incomparable.
bool octet_leq(PartizanStore& store, UValue a, UValue b);

struct BoolClass {
    UValue up = 0;
    UValue down = 0;
    Parity parity = Parity::Even;

    bool operator==(const BoolClass&) const = default;
};

std::string to_string(const BoolClass& c);

// X0 = overheat(octet, 1/2); X1 = * + X0. Canonical forms.
std::array<PartizanRef, kOctetSize> boolean_values(PartizanStore& store, Parity parity);

// Throws NotBooleanValued or ClassificationFailure.
BoolClass u_values(Workspace& ws, GameRef g);

// Greatest z in the octet with z <= x + y; least w with x + y - 1 <= w.
UValue cup(PartizanStore& store, UValue x, UValue y);
UValue cap(PartizanStore& store, UValue x, UValue y);
std::array<std::array<UValue, kOctetSize>, kOctetSize> cup_table(PartizanStore& store);
std::array<std::array<UValue, kOctetSize>, kOctetSize> cap_table(PartizanStore& store);

Outcome outcome_from_class(PartizanStore& store, const BoolClass& c);

bool is_legal(PartizanStore& store, const BoolClass& c);
// Throws IllegalClass when up is not >= down.
GameRef representative(Workspace& ws, const BoolClass& c);

struct ClassEntry {
    BoolClass cls;
    GameRef game;
};
// Ordered by (parity, up, down).
std::vector<ClassEntry> enumerate_classes(Workspace& ws);
// Number of equivalent pairs among the representatives; work is split over
// the given number of threads.
std::size_t count_equivalent_pairs(GameStore& store, const std::vector<ClassEntry>& entries,
                                   unsigned threads = 1);

struct ClaimCase {
    Parity source = Parity::Even;
    std::vector<UValue> left;
    std::vector<UValue> right;
    std::optional<UValue> match;  // index into the other value set
};
struct ClaimReport {
    std::vector<ClaimCase> cases;
    std::size_t passed() const;
};
ClaimReport verify_boolean_claim(Workspace& ws);

// Number of S-valued classes for |S| = size; nullopt means infinitely many.
std::optional<std::uint64_t> count_classes(std::uint64_t size);

}  // namespace wts

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wts/boolean.hpp"
#include "wts/game_store.hpp"

namespace wts {

// Boolean function on n inputs. Entry i is the value at the assignment whose
// binary digits are the inputs, input 1 least significant.
struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> bits;

    // bits is a string of 2^n characters '0'/'1'.
    static TruthTable parse(int n, std::string_view bits);
    std::uint8_t at(std::uint32_t assignment) const { return bits[assignment]; }
};

// Both players may set any unset input to 0 or 1; the final score is f of
// the full assignment.
GameRef input_setting_game(GameStore& store, const TruthTable& f);

using TwistVector = std::vector<std::int64_t>;

TwistVector parse_twists(std::string_view text);

// Numerator of the continued fraction [a1, ..., am], evaluated from the
// right as a pair so that a zero denominator needs no special case.
std::int64_t tangle_numerator(const std::vector<std::int64_t>& sums);

// Knotter (Left) scores 1 when the resolved diagram is knotted, that is
// when |numerator| >= 2. Throws TooLarge above 12 crossings.
GameRef shadow_game_brute(GameStore& store, const TwistVector& t);

struct ShadowReduction {
    TwistVector minimal;
    int stars = 0;
};
ShadowReduction reduce_shadow(const TwistVector& t);
BoolClass shadow_value_by_rule(const TwistVector& t);

}  // namespace wts

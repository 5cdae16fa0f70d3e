#pragma once

#include <cstdint>

namespace wts::detail {

// Memo tags. Every cached operation on a store owns one tag.
enum Op : std::uint32_t {
    kNegate = 1,
    kHeat,
    kSum,
    kSumOutcome,
    kOr,
    kAnd,
    kStarOp,
    kUpside,
    kCompare,
    kCanonical,
    kPsi,
    kPsiPlus,
    kPsiMinus,
    kPhi0,
    kPhi1,
    kPLeq,
    kPSum,
    kPNeg,
    kPCanonical,
    kPNumber,
    kPLeftStop,
    kPRightStop,
    kPOverheat,
    kPAsNumber,
    kRightAtLeast,
    kLeftAtLeast,
};

}  // namespace wts::detail

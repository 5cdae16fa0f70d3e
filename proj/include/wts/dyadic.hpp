#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wts {

// num / 2^exp in lowest terms: num is odd or exp is 0.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t n) : num_(n), exp_(0) {}  // NOLINT(google-explicit-constructor)
    Dyadic(std::int64_t num, int exp);

    std::int64_t num() const { return num_; }
    int exp() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator-() const;
    Dyadic half() const;

    std::int64_t floor() const;
    std::int64_t ceil() const;

    std::strong_ordering operator<=>(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const = default;

    std::string str() const;
    // Accepts "n" or "n/2^k"; throws SyntaxError.
    static Dyadic parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    int exp_ = 0;
};

// Simplest dyadic strictly between the bounds; an absent bound is unbounded.
// Requires lo < hi when both are present.
Dyadic simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi);

}  // namespace wts

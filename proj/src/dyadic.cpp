#include "wts/dyadic.hpp"

#include <charconv>

#include "wts/checked.hpp"
#include "wts/error.hpp"

namespace wts {

namespace {

constexpr int kMaxExp = 62;

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::Overflow, "dyadic out of range");
    return static_cast<std::int64_t>(v);
}

// floor(d * 2^k)
__int128 floor_scaled(const Dyadic& d, int k) {
    __int128 n = d.num();
    if (k >= d.exp()) return n << (k - d.exp());
    return n >> (d.exp() - k);
}

}  // namespace

Dyadic::Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp) {
    if (exp_ < 0 || exp_ > kMaxExp) throw Error(ErrorCode::Overflow, "dyadic exponent out of range");
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        --exp_;
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    int e = std::max(exp_, o.exp_);
    __int128 a = static_cast<__int128>(num_) << (e - exp_);
    __int128 b = static_cast<__int128>(o.num_) << (e - o.exp_);
    return Dyadic(narrow(a + b), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator-() const { return Dyadic(checked_neg(num_), exp_); }

Dyadic Dyadic::half() const { return Dyadic(num_, exp_ + 1); }

std::int64_t Dyadic::floor() const { return narrow(floor_scaled(*this, 0)); }

std::int64_t Dyadic::ceil() const { return -(-*this).floor(); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    int e = std::max(exp_, o.exp_);
    __int128 a = static_cast<__int128>(num_) << (e - exp_);
    __int128 b = static_cast<__int128>(o.num_) << (e - o.exp_);
    return a <=> b;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
    auto slash = text.find('/');
    auto read = [&](std::string_view part, std::size_t offset) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw SyntaxError(offset, "bad number '" + std::string(text) + "'");
        return v;
    };
    if (slash == std::string_view::npos) return Dyadic(read(text, 0));
    std::int64_t num = read(text.substr(0, slash), 0);
    std::int64_t den = read(text.substr(slash + 1), slash + 1);
    if (den <= 0 || (den & (den - 1)) != 0)
        throw SyntaxError(slash + 1, "denominator must be a power of two");
    int exp = 0;
    while ((std::int64_t{1} << exp) < den) ++exp;
    return Dyadic(num, exp);
}

Dyadic simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi) {
    if (lo && hi && !(*lo < *hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
    Dyadic zero(0);
    if ((!lo || *lo < zero) && (!hi || zero < *hi)) return zero;
    if (!hi) return Dyadic(lo->floor() + 1);
    if (!lo) return Dyadic(hi->ceil() - 1);
    if (zero <= *lo) {
        Dyadic n(lo->floor() + 1);
        if (n < *hi) return n;
    } else {
        Dyadic n(hi->ceil() - 1);
        if (*lo < n) return n;
    }
    for (int k = 1; k <= kMaxExp; ++k) {
        Dyadic cand(narrow(floor_scaled(*lo, k) + 1), k);
        if (cand < *hi) return cand;
    }
    throw Error(ErrorCode::Overflow, "interval too narrow");
}

}  // namespace wts
